#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtaft/structure.hpp"

#include <random>

using namespace qtaft;

namespace {

CyclotomicScalar q_pow(const GtaParameters& p, std::int64_t e) {
    return CyclotomicScalar::root_power(p.N, e);
}

}  // namespace

TEST_CASE("left integral at (2,1,1,1,1) is (1 + g) x y") {
    auto p = make_parameters(2, 1, 1, 1, 1);
    auto lam = left_integral(p);
    AlgebraElement expect(p);
    expect.add_term({1, 1, 0}, CyclotomicScalar::one(2));
    expect.add_term({1, 1, 1}, CyclotomicScalar::one(2));
    CHECK(lam == expect);
}

TEST_CASE("integral property h Lambda = eps(h) Lambda on the full basis") {
    for (auto tup : {std::array<std::int64_t, 5>{2, 1, 1, 1, 1},
                     {6, 1, 1, 1, 5},
                     {8, 1, 2, 1, 6}}) {
        auto p = make_parameters(tup[0], tup[1], tup[2], tup[3], tup[4]);
        auto lam = left_integral(p);
        for (std::int64_t idx = 0; idx < p->dimension(); ++idx) {
            auto m = monomial_at(*p, idx);
            auto lhs = AlgebraElement::monomial(p, m) * lam;
            if (m.i == 0 && m.j == 0)
                CHECK(lhs == lam);
            else
                CHECK(lhs.is_zero());
        }
    }
}

TEST_CASE("the space of left integrals is one-dimensional") {
    // Structural proof, checked mechanically.  x * m and y * m shift a
    // monomial injectively below the nilpotency ceiling, so any element
    // killed by x and y is supported on i = Nx-1, j = Ny-1; there,
    // g-invariance forces the coefficients into a single geometric
    // recurrence, whose solution with leading coefficient 1 must be the
    // returned integral.
    for (auto tup : {std::array<std::int64_t, 5>{2, 1, 1, 1, 1},
                     {3, 1, 1, 1, 2},
                     {4, 1, 1, 1, 3},
                     {4, 2, 2, 1, 1}}) {
        auto p = make_parameters(tup[0], tup[1], tup[2], tup[3], tup[4]);
        for (std::int64_t idx = 0; idx < p->dimension(); ++idx) {
            auto m = monomial_at(*p, idx);
            auto xm = monomial_product(*p, {1, 0, 0}, m);
            auto ym = monomial_product(*p, {0, 1, 0}, m);
            // Left multiplication by x (resp. y) is a scaled shift of i
            // (resp. j), zero exactly at the ceiling.
            CHECK(xm.zero == (m.i == p->Nx - 1));
            if (!xm.zero) CHECK(xm.m == BasisMonomial{m.i + 1, m.j, m.l});
            CHECK(ym.zero == (m.j == p->Ny - 1));
            if (!ym.zero) CHECK(ym.m.j == m.j + 1);
        }
        // The geometric recurrence c_l = q^{b1 (Nx-1) + b2 (Ny-1)} c_{l-1}
        // with c_0 = 1 rebuilds the integral.
        const std::int64_t w = p->b1 * (p->Nx - 1) + p->b2 * (p->Ny - 1);
        AlgebraElement rebuilt(p);
        auto c = CyclotomicScalar::one(p->N);
        for (std::int32_t l = 0; l < p->N; ++l) {
            rebuilt.add_term({static_cast<std::int32_t>(p->Nx - 1),
                              static_cast<std::int32_t>(p->Ny - 1), l},
                             c);
            c *= q_pow(*p, w);
        }
        // Normalise to the same leading coefficient as the library's
        // integral before comparing the spans.
        auto lam = left_integral(p);
        const BasisMonomial lead{static_cast<std::int32_t>(p->Nx - 1),
                                 static_cast<std::int32_t>(p->Ny - 1), 0};
        auto it = lam.terms().find(lead);
        REQUIRE(it != lam.terms().end());
        CHECK(rebuilt * it->second == lam);
        // And it is a left integral under g as well.
        CHECK(AlgebraElement::gen_g(p) * rebuilt == rebuilt);
    }
}

TEST_CASE("dual integral absorbs functionals: f * Upsilon = f(1) Upsilon") {
    auto p = make_parameters(6, 1, 1, 1, 5);
    auto ups = dual_integral(p);
    auto [xi, psi, phi] = dual_generators(p);
    const auto one = AlgebraElement::unit(p);
    CHECK(convolve(xi, ups) == ups * xi.evaluate(one));
    CHECK(convolve(psi, ups).is_zero());
    CHECK(convolve(phi, ups).is_zero());
}

TEST_CASE("distinguished group-like exponents") {
    // (8,1,2,1,6): Nx = 8, Ny = 2, so e_xi = b1*7 + b2*1 = 13 = 5 mod 8
    // and e_g = a1*7 + a2*1 = 9 = 1 mod 8.
    auto p = make_parameters(8, 1, 2, 1, 6);
    auto [e_xi, e_g] = distinguished_grouplikes(p);
    CHECK(e_xi == 5);
    CHECK(e_g == 1);

    // (48,34,4,26,4): Nx = 12, Ny = 3, e_xi = 26*11 + 4*2 = 294 = 6 mod 48,
    // e_g = 34*11 + 4*2 = 382 = 46 mod 48.
    auto big = make_parameters(48, 34, 4, 26, 4);
    auto [be_xi, be_g] = distinguished_grouplikes(big);
    CHECK(be_xi == 6);
    CHECK(be_g == 46);

    // (2,1,1,1,1) is unimodular on both sides: b1 Nx = b2 Ny = 0 mod 2 and
    // the exponents collapse to -(b1+b2) = 0 and -(a1+a2) = 0.
    auto s = make_parameters(2, 1, 1, 1, 1);
    auto [se_xi, se_g] = distinguished_grouplikes(s);
    CHECK(se_xi == 0);
    CHECK(se_g == 0);
}

TEST_CASE("distinguished exponents satisfy the defining one-sided actions") {
    for (auto tup : {std::array<std::int64_t, 5>{6, 1, 1, 1, 5},
                     {8, 1, 2, 1, 6},
                     {8, 1, 1, 1, 7}}) {
        auto p = make_parameters(tup[0], tup[1], tup[2], tup[3], tup[4]);
        auto [e_xi, e_g] = distinguished_grouplikes(p);
        auto lam = left_integral(p);
        // Lambda h = alpha(h) Lambda with alpha = xi^{e_xi}: on h = g this
        // reads Lambda g = q^{-e_xi} Lambda, and Lambda x = Lambda y = 0.
        CHECK(lam * AlgebraElement::gen_g(p) == lam * q_pow(*p, -e_xi));
        CHECK((lam * AlgebraElement::gen_x(p)).is_zero());
        CHECK((lam * AlgebraElement::gen_y(p)).is_zero());
        // Dual side: Upsilon * f = f(g^{e_g}) Upsilon on the generators.
        auto ups = dual_integral(p);
        auto [xi, psi, phi] = dual_generators(p);
        const auto ge = AlgebraElement::monomial(
            p, {0, 0, static_cast<std::int32_t>(e_g)});
        CHECK(convolve(ups, xi) == ups * xi.evaluate(ge));
        CHECK(convolve(ups, psi).is_zero());
        CHECK(convolve(ups, phi).is_zero());
    }
}

TEST_CASE("quasitriangularity criterion") {
    CHECK(is_quasitriangular(*make_parameters(2, 1, 1, 1, 1)));
    CHECK(is_quasitriangular(*make_parameters(4, 2, 2, 1, 1)));
    CHECK(!is_quasitriangular(*make_parameters(8, 1, 2, 1, 6)));
    CHECK(!is_quasitriangular(*make_parameters(6, 1, 1, 1, 5)));
    CHECK(!is_quasitriangular(*make_parameters(3, 1, 1, 1, 2)));  // odd N
}

TEST_CASE("Radford S^4 formula on the full basis") {
    for (auto tup : {std::array<std::int64_t, 5>{2, 1, 1, 1, 1},
                     {6, 1, 1, 1, 5},
                     {8, 1, 2, 1, 6},
                     {12, 1, 2, 1, 10}}) {
        auto p = make_parameters(tup[0], tup[1], tup[2], tup[3], tup[4]);
        std::optional<BasisMonomial> w;
        CHECK(verify_radford_s4(p, &w));
        CHECK(!w.has_value());
    }
}

TEST_CASE("conjugation twist by the trivial pair is the identity") {
    auto p = make_parameters(6, 1, 1, 1, 5);
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<std::int64_t> dist(0, p->dimension() - 1);
    for (int t = 0; t < 60; ++t) {
        auto m = monomial_at(*p, dist(rng));
        CHECK(conjugation_twist(p, 0, 0, m) == AlgebraElement::monomial(p, m));
    }
}

TEST_CASE("structure_report coherence") {
    auto p = make_parameters(8, 1, 2, 1, 6);
    auto rep = structure_report(p);
    CHECK(rep.e_xi == 5);
    CHECK(rep.e_g == 1);
    CHECK(!rep.unimodular);
    CHECK(!rep.dual_unimodular);
    CHECK(!rep.quasitriangular);
    CHECK(rep.radford_ok);
    CHECK(rep.integral == left_integral(p));

    auto s = make_parameters(2, 1, 1, 1, 1);
    auto srep = structure_report(s);
    CHECK(srep.unimodular);
    CHECK(srep.dual_unimodular);
    CHECK(srep.quasitriangular);
    CHECK(srep.radford_ok);
}
