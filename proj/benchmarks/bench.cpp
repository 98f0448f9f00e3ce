#include "qtaft/axioms.hpp"
#include "qtaft/doubles.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace qtaft;

namespace {

ParamsPtr big() { return make_parameters(8, 1, 1, 1, 7); }  // dimension 512

AlgebraElement random_element(const ParamsPtr& p, std::mt19937_64& rng, int terms) {
    std::uniform_int_distribution<std::int64_t> dist(0, p->dimension() - 1);
    AlgebraElement u(p);
    for (int t = 0; t < terms; ++t)
        u.add_term(monomial_at(*p, dist(rng)),
                   CyclotomicScalar::root_power(p->N, dist(rng)));
    return u;
}

void BM_Multiply(benchmark::State& state) {
    auto p = big();
    std::mt19937_64 rng(1);
    auto u = random_element(p, rng, static_cast<int>(state.range(0)));
    auto v = random_element(p, rng, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(u * v);
}
BENCHMARK(BM_Multiply)->Arg(4)->Arg(32);

void BM_Coproduct(benchmark::State& state) {
    auto p = big();
    const BasisMonomial m{static_cast<std::int32_t>(p->Nx - 1),
                          static_cast<std::int32_t>(p->Ny - 1), 3};
    for (auto _ : state) benchmark::DoNotOptimize(coproduct_monomial(p, m));
}
BENCHMARK(BM_Coproduct);

void BM_Antipode(benchmark::State& state) {
    auto p = big();
    std::mt19937_64 rng(2);
    auto u = random_element(p, rng, 8);
    for (auto _ : state) benchmark::DoNotOptimize(antipode(u));
}
BENCHMARK(BM_Antipode);

void BM_Convolve(benchmark::State& state) {
    auto p = big();
    auto [xi, psi, phi] = dual_generators(p);
    auto f = convolve(xi, psi);
    for (auto _ : state) benchmark::DoNotOptimize(convolve(f, phi));
}
BENCHMARK(BM_Convolve);

void BM_ClassifyAndOracle(benchmark::State& state) {
    auto p = validate_parameters(48, 34, 4, 26, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify(p));
        benchmark::DoNotOptimize(oracle_pairs(p));
    }
}
BENCHMARK(BM_ClassifyAndOracle);

void BM_ScanExhaustive(benchmark::State& state) {
    const auto maxN = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(cross_validate(maxN, ScanMode::Exhaustive));
}
BENCHMARK(BM_ScanExhaustive)->Arg(8)->Arg(12);

void BM_DoubleMultiply(benchmark::State& state) {
    auto p = make_parameters(4, 1, 1, 1, 3);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::int32_t> dr(0, 3);
    std::vector<DoubleElement> us;
    for (int k = 0; k < 16; ++k)
        us.push_back(DoubleElement::basis(
            p, DoubleKind::Drinfeld, {dr(rng), dr(rng), dr(rng)},
            {dr(rng), dr(rng), dr(rng)}));
    std::size_t k = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(double_multiply(us[k], us[(k + 1) % us.size()]));
        k = (k + 1) % us.size();
    }
}
BENCHMARK(BM_DoubleMultiply);

void BM_Radford(benchmark::State& state) {
    auto p = big();
    for (auto _ : state) benchmark::DoNotOptimize(verify_radford_s4(p));
}
BENCHMARK(BM_Radford);

}  // namespace

BENCHMARK_MAIN();
