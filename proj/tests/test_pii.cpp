#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtaft/pii.hpp"

#include <algorithm>
#include <random>

using namespace qtaft;

namespace {

bool is_solution(const GtaParameters& p, std::int64_t c, std::int64_t d) {
    // Independent oracle: the two linear congruences of the antipode
    // condition on the generators.
    return mod_norm(p.a1 * c + p.b1 * d - p.a1 * p.b1, p.N) == 0 &&
           mod_norm(p.a2 * c + p.b2 * d - p.a2 * p.b2, p.N) == 0;
}

}  // namespace

TEST_CASE("oracle_pairs agrees with direct enumeration and is sorted") {
    for (auto tup : {std::array<std::int64_t, 5>{6, 1, 1, 1, 5},
                     {8, 1, 2, 1, 6},
                     {8, 1, 1, 1, 7},
                     {12, 1, 2, 1, 10}}) {
        auto p = validate_parameters(tup[0], tup[1], tup[2], tup[3], tup[4]);
        auto certs = oracle_pairs(p);
        std::vector<std::pair<std::int64_t, std::int64_t>> expect;
        for (std::int64_t c = 0; c < p.N; ++c)
            for (std::int64_t d = 0; d < p.N; ++d)
                if (is_solution(p, c, d)) expect.emplace_back(c, d);
        REQUIRE(certs.size() == expect.size());
        for (std::size_t k = 0; k < certs.size(); ++k) {
            CHECK(certs[k].c == expect[k].first);
            CHECK(certs[k].d == expect[k].second);
            CHECK(certs[k].modular ==
                  (mod_norm(certs[k].c * certs[k].d, p.N) == 0));
        }
        CHECK(std::is_sorted(certs.begin(), certs.end(),
                             [](const PiiCertificate& u, const PiiCertificate& v) {
                                 return std::pair(u.c, u.d) < std::pair(v.c, v.d);
                             }));
    }
}

TEST_CASE("known certificate sets") {
    // (8,1,2,1,6) has no pair at all.
    CHECK(oracle_pairs(validate_parameters(8, 1, 2, 1, -2)).empty());
    // (6,1,1,1,5) has a modular pair (0,1).
    auto certs = oracle_pairs(validate_parameters(6, 1, 1, 1, 5));
    REQUIRE(!certs.empty());
    CHECK(certs.front().c == 0);
    CHECK(certs.front().d == 1);
    CHECK(certs.front().modular);
}

TEST_CASE("odd_part_solution") {
    auto p = validate_parameters(3, 1, 1, 1, 2);
    auto cert = odd_part_solution(p);
    CHECK(cert.c == 0);
    CHECK(cert.d == 1);
    CHECK_THROWS_AS(odd_part_solution(validate_parameters(8, 1, 2, 1, 6)),
                    std::invalid_argument);

    // For every valid odd tuple N <= 9, the closed form solves the system
    // and appears among the oracle's certificates.
    for (std::int64_t N = 3; N <= 9; N += 2)
        for (std::int64_t a1 = 1; a1 < N; ++a1)
            for (std::int64_t a2 = 1; a2 < N; ++a2)
                for (std::int64_t b1 = 1; b1 < N; ++b1)
                    for (std::int64_t b2 = 1; b2 < N; ++b2) {
                        if (!is_valid_tuple(N, a1, a2, b1, b2)) continue;
                        auto q = validate_parameters(N, a1, a2, b1, b2);
                        auto s = odd_part_solution(q);
                        CHECK(is_solution(q, s.c, s.d));
                        auto all = oracle_pairs(q);
                        CHECK(std::any_of(all.begin(), all.end(),
                                          [&](const PiiCertificate& u) {
                                              return u.c == s.c && u.d == s.d;
                                          }));
                    }
}

TEST_CASE("classifier 2-adic data at N = 48") {
    auto r = classify(validate_parameters(48, 34, 4, 26, 4));
    CHECK(r.n == 4);
    CHECK(r.j == 3);
    CHECK(r.pow_a1 == 1);
    CHECK(r.pow_a2 == 2);
    CHECK(r.pow_b1 == 1);
    CHECK(r.pow_b2 == 2);
    CHECK(r.det_mu == 12);
    CHECK(r.tau == 2);
    CHECK(!r.has_pair);

    auto r2 = classify(validate_parameters(48, 34, 28, 26, 4));
    CHECK(r2.det_mu == 2);
    CHECK(r2.tau == 1);
    CHECK(r2.has_pair);
}

TEST_CASE("classifier on odd N always reports a pair") {
    for (auto tup : {std::array<std::int64_t, 5>{3, 1, 1, 1, 2},
                     {5, 1, 1, 1, 4},
                     {21, 1, 2, 1, 19}}) {
        auto r = classify_raw(tup[0], tup[1], tup[2], tup[3], tup[4]);
        CHECK(r.n == 0);
        CHECK(r.has_pair);
    }
}

TEST_CASE("classifier is invariant under swapping the two twisted primitives") {
    // Swapping (a1, b1) with (a2, b2) presents the same algebra.
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 400; ++trial) {
        std::uniform_int_distribution<std::int64_t> dn(2, 48);
        const std::int64_t N = dn(rng);
        std::uniform_int_distribution<std::int64_t> dv(1, N - 1);
        const std::int64_t a1 = dv(rng), a2 = dv(rng), b1 = dv(rng), b2 = dv(rng);
        if (!is_valid_tuple(N, a1, a2, b1, b2)) continue;
        CHECK(classify_raw(N, a1, a2, b1, b2).has_pair ==
              classify_raw(N, a2, a1, b2, b1).has_pair);
    }
}

TEST_CASE("verify_certificate against the machinery") {
    auto p = make_parameters(6, 1, 1, 1, 5);
    std::optional<BasisMonomial> w;
    CHECK(verify_certificate(p, PiiCertificate{0, 1, true}, &w));
    CHECK(!w.has_value());
    CHECK(!verify_certificate(p, PiiCertificate{1, 1, false}, &w));
    CHECK(w.has_value());

    // Every oracle certificate passes and a non-solution fails, over all
    // valid tuples with N <= 4.
    for (std::int64_t N = 2; N <= 4; ++N)
        for (std::int64_t a1 = 1; a1 < N; ++a1)
            for (std::int64_t a2 = 1; a2 < N; ++a2)
                for (std::int64_t b1 = 1; b1 < N; ++b1)
                    for (std::int64_t b2 = 1; b2 < N; ++b2) {
                        if (!is_valid_tuple(N, a1, a2, b1, b2)) continue;
                        auto q = make_parameters(N, a1, a2, b1, b2);
                        auto certs = oracle_pairs(*q);
                        for (const auto& cert : certs)
                            CHECK(verify_certificate(q, cert));
                        for (std::int64_t c = 0; c < N; ++c)
                            for (std::int64_t d = 0; d < N; ++d) {
                                if (is_solution(*q, c, d)) continue;
                                CHECK(!verify_certificate(q, PiiCertificate{c, d}));
                            }
                    }
}

TEST_CASE("cross_validate exhaustive N <= 8: counts and zero disagreements") {
    auto rep = cross_validate(8, ScanMode::Exhaustive);
    CHECK(rep.ok);
    CHECK(!rep.counterexample.has_value());
    REQUIRE(rep.rows.size() == 7);
    const std::uint64_t valid[] = {1, 8, 16, 64, 113, 216, 240};
    for (std::size_t k = 0; k < rep.rows.size(); ++k) {
        CHECK(rep.rows[k].N == std::int64_t(k) + 2);
        CHECK(rep.rows[k].valid_tuples == valid[k]);
        CHECK(rep.rows[k].disagreements == 0);
    }
    // PII-free counts: none below N = 8, 64 at N = 8.
    for (std::size_t k = 0; k + 1 < rep.rows.size(); ++k)
        CHECK(rep.rows[k].pii_free == 0);
    CHECK(rep.rows.back().pii_free == 64);
    // Tuples without modular pairs exist already at N = 5 and N = 7.
    CHECK(rep.rows[3].modular_free == 32);
    CHECK(rep.rows[5].modular_free == 144);
    CHECK(rep.rows[6].modular_free == 96);
}

TEST_CASE("cross_validate is deterministic and parallelism-independent") {
    auto a = cross_validate(10, ScanMode::Exhaustive, kDefaultScanSeed, 1);
    auto b = cross_validate(10, ScanMode::Exhaustive, kDefaultScanSeed, 3);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t k = 0; k < a.rows.size(); ++k) {
        CHECK(a.rows[k].valid_tuples == b.rows[k].valid_tuples);
        CHECK(a.rows[k].pii_free == b.rows[k].pii_free);
        CHECK(a.rows[k].modular_free == b.rows[k].modular_free);
    }
    // Sampled mode with the same seed reproduces itself.
    auto s1 = cross_validate(28, ScanMode::Sampled, 42, 2);
    auto s2 = cross_validate(28, ScanMode::Sampled, 42, 1);
    REQUIRE(s1.rows.size() == s2.rows.size());
    for (std::size_t k = 0; k < s1.rows.size(); ++k) {
        CHECK(s1.rows[k].valid_tuples == s2.rows[k].valid_tuples);
        CHECK(s1.rows[k].pii_free == s2.rows[k].pii_free);
    }
    CHECK(s1.ok);
}
