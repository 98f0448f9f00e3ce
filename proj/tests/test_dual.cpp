#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtaft/dual.hpp"

#include <random>

using namespace qtaft;

namespace {

CyclotomicScalar q_pow(const GtaParameters& p, std::int64_t e) {
    return CyclotomicScalar::root_power(p.N, e);
}

Functional point_mass(const ParamsPtr& p, std::int64_t idx) {
    Functional f(p);
    f.set_value(monomial_at(*p, idx), CyclotomicScalar::one(p->N));
    return f;
}

}  // namespace

TEST_CASE("generator values") {
    auto p = make_parameters(8, 1, 2, 1, 6);
    auto [xi, psi, phi] = dual_generators(p);
    // xi(x^i y^j g^l) = q^{-l} [i = j = 0].
    CHECK(xi.value({0, 0, 1}) == q_pow(*p, -1));
    CHECK(xi.value({0, 0, 5}) == q_pow(*p, -5));
    CHECK(xi.value({1, 0, 1}).is_zero());
    // psi(x^i y^j g^l) = q^{-b1 l} [i = 1, j = 0].
    CHECK(psi.value({1, 0, 0}).is_one());
    CHECK(psi.value({1, 0, 3}) == q_pow(*p, -p->b1 * 3));
    CHECK(psi.value({0, 0, 0}).is_zero());
    CHECK(psi.value({0, 1, 0}).is_zero());
    // phi(x^i y^j g^l) = q^{-b2 l} [i = 0, j = 1].
    CHECK(phi.value({0, 0, 0}).is_zero());
    CHECK(phi.value({0, 1, 2}) == q_pow(*p, -p->b2 * 2));
}

TEST_CASE("convolution unit and dual relations") {
    auto p = make_parameters(8, 1, 2, 1, 6);
    auto eps = Functional::counit(p);
    auto [xi, psi, phi] = dual_generators(p);

    CHECK(convolve(eps, xi) == xi);
    CHECK(convolve(psi, eps) == psi);

    // xi^N = eps.
    auto xin = eps;
    for (std::int64_t r = 0; r < p->N; ++r) xin = convolve(xin, xi);
    CHECK(xin == eps);
    // psi^{Nx} = 0, phi^{Ny} = 0, with all lower powers nonzero.
    auto ps = eps;
    for (std::int64_t s = 0; s < p->Nx; ++s) {
        if (s > 0) CHECK(!ps.is_zero());
        ps = convolve(ps, psi);
    }
    CHECK(ps.is_zero());
    auto ph = eps;
    for (std::int64_t t = 0; t < p->Ny; ++t) ph = convolve(ph, phi);
    CHECK(ph.is_zero());

    // xi psi = q^{a1} psi xi, xi phi = q^{a2} phi xi, psi phi = q^{b1 a2} phi psi.
    CHECK(convolve(xi, psi) == convolve(psi, xi) * q_pow(*p, p->a1));
    CHECK(convolve(xi, phi) == convolve(phi, xi) * q_pow(*p, p->a2));
    CHECK(convolve(psi, phi) == convolve(phi, psi) * q_pow(*p, p->b1 * p->a2));
}

TEST_CASE("functional_monomial") {
    auto p = make_parameters(8, 1, 2, 1, 6);
    auto [xi, psi, phi] = dual_generators(p);
    CHECK(functional_monomial(p, 0, 0, 0) == Functional::counit(p));
    CHECK(functional_monomial(p, 1, 0, 0) == xi);
    CHECK(functional_monomial(p, 0, 1, 0) == psi);
    CHECK(functional_monomial(p, 0, 0, 1) == phi);
    CHECK(functional_monomial(p, 2, 1, 0) ==
          convolve(convolve(xi, xi), psi));
    CHECK_THROWS_AS(functional_monomial(p, 0, p->Nx, 0), std::invalid_argument);

    auto table = functional_basis(p);
    CHECK(table->size() == static_cast<std::size_t>(p->dimension()));
    for (std::int64_t r = 0; r < p->N; ++r)
        for (std::int64_t s = 0; s < p->Nx; ++s)
            for (std::int64_t t = 0; t < p->Ny; ++t) {
                const BasisMonomial key{static_cast<std::int32_t>(s),
                                        static_cast<std::int32_t>(t),
                                        static_cast<std::int32_t>(r)};
                CHECK((*table)[static_cast<std::size_t>(monomial_index(*p, key))] ==
                      functional_monomial(p, r, s, t));
            }
}

TEST_CASE("convolution is associative on point-mass functionals") {
    // Exhaustive on all triples for N = 2, 3.
    for (auto tup : {std::array<std::int64_t, 5>{2, 1, 1, 1, 1}, {3, 1, 1, 1, 2}}) {
        auto p = make_parameters(tup[0], tup[1], tup[2], tup[3], tup[4]);
        const auto dim = p->dimension();
        std::vector<Functional> delta;
        for (std::int64_t i = 0; i < dim; ++i) delta.push_back(point_mass(p, i));
        for (std::int64_t i = 0; i < dim; ++i)
            for (std::int64_t j = 0; j < dim; ++j) {
                auto ij = convolve(delta[i], delta[j]);
                for (std::int64_t k = 0; k < dim; ++k)
                    CHECK(convolve(ij, delta[k]) ==
                          convolve(delta[i], convolve(delta[j], delta[k])));
            }
    }
    // Fixed-seed sample at N = 6.
    auto p = make_parameters(6, 1, 1, 1, 5);
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<std::int64_t> dist(0, p->dimension() - 1);
    for (int t = 0; t < 150; ++t) {
        auto f = point_mass(p, dist(rng));
        auto g = point_mass(p, dist(rng));
        auto h = point_mass(p, dist(rng));
        CHECK(convolve(convolve(f, g), h) == convolve(f, convolve(g, h)));
    }
}

TEST_CASE("group-like functionals are characters") {
    auto p = make_parameters(6, 1, 1, 1, 5);
    auto [xi, psi, phi] = dual_generators(p);
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<std::int64_t> dist(0, p->dimension() - 1);
    for (int t = 0; t < 100; ++t) {
        auto u = AlgebraElement::monomial(p, monomial_at(*p, dist(rng)));
        auto v = AlgebraElement::monomial(p, monomial_at(*p, dist(rng)));
        CHECK(xi.evaluate(u * v) == xi.evaluate(u) * xi.evaluate(v));
    }
}

TEST_CASE("check_duality reports and dual tuples") {
    auto p = make_parameters(8, 1, 2, 1, 6);
    auto rep = check_duality(p);
    CHECK(rep.ok);
    CHECK(rep.failures.empty());
    CHECK(rep.dual_tuple == std::array<std::int64_t, 4>{1, 6, 1, 2});

    auto s = make_parameters(2, 1, 1, 1, 1);
    auto srep = check_duality(s);
    CHECK(srep.ok);
    CHECK(srep.dual_tuple == std::array<std::int64_t, 4>{1, 1, 1, 1});  // self-dual
}

TEST_CASE("dual of the dual is the original tuple") {
    for (auto tup : {std::array<std::int64_t, 5>{8, 1, 2, 1, 6},
                     {6, 1, 1, 1, 5},
                     {48, 34, 4, 26, 4}}) {
        auto p = make_parameters(tup[0], tup[1], tup[2], tup[3], tup[4]);
        auto d = check_duality(p).dual_tuple;
        auto pd = make_parameters(p->N, d[0], d[1], d[2], d[3]);
        CHECK(pd->Nx == p->Nx);
        CHECK(pd->Ny == p->Ny);
        auto dd = check_duality(pd).dual_tuple;
        CHECK(dd == std::array<std::int64_t, 4>{p->a1, p->a2, p->b1, p->b2});
    }
}

TEST_CASE("pairing diagonal entry at the counit") {
    // The pairing element for (r, s, t) = (0, 0, 0) is sum_m g^m, and
    // eps(sum_m g^m) = N.
    auto p = make_parameters(8, 1, 2, 1, 6);
    AlgebraElement e(p);
    for (std::int32_t m = 0; m < p->N; ++m)
        e.add_term({0, 0, m}, CyclotomicScalar::one(p->N));
    CHECK(Functional::counit(p).evaluate(e) ==
          CyclotomicScalar::from_integer(p->N, p->N));
}

TEST_CASE("duality holds on every valid tuple N <= 6") {
    for (std::int64_t N = 2; N <= 6; ++N)
        for (std::int64_t a1 = 1; a1 < N; ++a1)
            for (std::int64_t a2 = 1; a2 < N; ++a2)
                for (std::int64_t b1 = 1; b1 < N; ++b1)
                    for (std::int64_t b2 = 1; b2 < N; ++b2) {
                        if (!is_valid_tuple(N, a1, a2, b1, b2)) continue;
                        auto p = make_parameters(N, a1, a2, b1, b2);
                        auto rep = check_duality(p);
                        INFO(p->to_string());
                        CHECK(rep.ok);
                        CHECK(rep.dual_tuple ==
                              std::array<std::int64_t, 4>{b1, b2, a1, a2});
                    }
}
