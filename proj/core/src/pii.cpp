#include "qtaft/pii.hpp"

#include <future>
#include <numeric>
#include <random>

namespace qtaft {

namespace {

bool is_solution(std::int64_t N, std::int64_t a1, std::int64_t a2, std::int64_t b1,
                 std::int64_t b2, std::int64_t c, std::int64_t d) {
    return (a1 * c + b1 * d - a1 * b1) % N == 0 &&
           (a2 * c + b2 * d - a2 * b2) % N == 0;
}

// Oracle scan of Z_N^2; reports existence of any and of a modular solution.
void oracle_scan(std::int64_t N, std::int64_t a1, std::int64_t a2, std::int64_t b1,
                 std::int64_t b2, bool& any, bool& modular) {
    any = modular = false;
    for (std::int64_t c = 0; c < N; ++c) {
        for (std::int64_t d = 0; d < N; ++d) {
            if (!is_solution(N, a1, a2, b1, b2, c, d)) continue;
            any = true;
            if (c * d % N == 0) {
                modular = true;
                return;
            }
        }
    }
}

}  // namespace

std::vector<PiiCertificate> oracle_pairs(const GtaParameters& p) {
    std::vector<PiiCertificate> certs;
    for (std::int64_t c = 0; c < p.N; ++c)
        for (std::int64_t d = 0; d < p.N; ++d)
            if (is_solution(p.N, p.a1, p.a2, p.b1, p.b2, c, d))
                certs.push_back({c, d, c * d % p.N == 0});
    return certs;
}

PiiCertificate odd_part_solution(const GtaParameters& p) {
    if (p.N % 2 == 0)
        throw std::invalid_argument("odd_part_solution: N must be odd");
    const std::int64_t inv2 = (p.N + 1) / 2;  // 2 * (N+1)/2 = 1 mod odd N
    PiiCertificate cert;
    cert.c = inv2 * (p.b1 + p.b2) % p.N;
    cert.d = inv2 * (p.a1 + p.a2) % p.N;
    cert.modular = cert.c * cert.d % p.N == 0;
    if (!is_solution(p.N, p.a1, p.a2, p.b1, p.b2, cert.c, cert.d))
        throw std::logic_error("odd_part_solution: closed form fails the equations");
    return cert;
}

ClassifierReport classify_raw(std::int64_t N, std::int64_t a1, std::int64_t a2,
                              std::int64_t b1, std::int64_t b2) {
    ClassifierReport r;
    r.n = 0;
    r.j = N;
    while (r.j % 2 == 0) {
        r.j /= 2;
        ++r.n;
    }
    if (r.n == 0) {
        r.has_pair = true;
        r.reason = "odd_order";
        return r;
    }

    const std::int64_t two_n = std::int64_t(1) << r.n;
    // Coefficient and power of one parameter mod 2^n.
    auto split = [&](std::int64_t v, std::optional<std::int64_t>& power,
                     std::int64_t& mu) {
        v = mod_norm(v, two_n);
        if (v == 0) {
            power.reset();
            mu = 0;
            return;
        }
        std::int64_t e = 0;
        while (v % 2 == 0) {
            v /= 2;
            ++e;
        }
        power = e;
        mu = v;
    };
    split(a1, r.pow_a1, r.mu[0][0]);
    split(a2, r.pow_a2, r.mu[1][0]);
    split(b1, r.pow_b1, r.mu[0][1]);
    split(b2, r.pow_b2, r.mu[1][1]);

    if (r.pow_a1 && r.pow_a2 && r.pow_b1 && r.pow_b2) {
        // Presentation choice (a1,b1) <-> (a2,b2) so that pow_a1 <= pow_a2.
        if (*r.pow_a1 > *r.pow_a2) {
            std::swap(r.pow_a1, r.pow_a2);
            std::swap(r.pow_b1, r.pow_b2);
            std::swap(r.mu[0], r.mu[1]);
            r.swapped = true;
        }

        r.det_mu =
            mod_norm(r.mu[0][0] * r.mu[1][1] - r.mu[0][1] * r.mu[1][0], two_n);
        if (r.det_mu == 0) {
            r.tau = 0;
            r.nu = 0;
        } else {
            std::int64_t v = r.det_mu;
            r.tau = 0;
            while (v % 2 == 0) {
                v /= 2;
                ++r.tau;
            }
            r.nu = v;
        }
    }

    // Exact solvability of the 2-part of the system by elimination.  The
    // residues mod 2^n of the right-hand sides are determined by the
    // coefficients, so everything below lives in Z_{2^n}.
    const auto val_or_n = [&](std::int64_t v) {
        if (v == 0) return r.n;
        std::int64_t e = 0;
        while (v % 2 == 0) {
            v /= 2;
            ++e;
        }
        return e;
    };
    std::int64_t A1 = mod_norm(a1, two_n), A2 = mod_norm(a2, two_n);
    std::int64_t B1 = mod_norm(b1, two_n), B2 = mod_norm(b2, two_n);
    // Swapping the equations permutes (A1,B1) with (A2,B2); swapping the
    // unknowns (c,d) exchanges the A-column with the B-column.  Use both
    // to move a coefficient of minimal 2-adic valuation into the A1 slot.
    if (std::min(val_or_n(B1), val_or_n(B2)) <
        std::min(val_or_n(A1), val_or_n(A2))) {
        std::swap(A1, B1);
        std::swap(A2, B2);
    }
    if (val_or_n(A2) < val_or_n(A1)) {
        std::swap(A1, A2);
        std::swap(B1, B2);
    }
    if (A1 == 0) {
        // All coefficients vanish mod 2^n, and with them both targets.
        r.has_pair = true;
        r.reason = "system_trivial_mod_2n";
        return r;
    }
    const std::int64_t m = val_or_n(A1);
    const std::int64_t u = A1 >> m;
    // Inverse of the odd unit u mod 2^n by Newton iteration.
    std::int64_t uinv = 1;
    for (std::int64_t k = 0; k < r.n; ++k)
        uinv = mod_norm(uinv * (2 - u * uinv % two_n), two_n);
    // Solving the first congruence for c (valid since m is minimal) and
    // substituting into the second leaves the single congruence
    // E d = R mod 2^n with the eliminant E below.
    const std::int64_t E =
        mod_norm(B2 - uinv * (B1 >> m) % two_n * A2, two_n);
    const std::int64_t R = mod_norm(A2 * (B2 - B1), two_n);
    r.has_pair = val_or_n(E) <= val_or_n(R);
    r.reason = r.has_pair ? "eliminant_divides_rhs" : "eliminant_exceeds_rhs";
    return r;
}

ClassifierReport classify(const GtaParameters& p) {
    return classify_raw(p.N, p.a1, p.a2, p.b1, p.b2);
}

bool verify_certificate(const ParamsPtr& params, const PiiCertificate& cert,
                        std::optional<BasisMonomial>* witness) {
    const auto& p = *params;
    for (std::int64_t idx = 0; idx < p.dimension(); ++idx) {
        const auto m = monomial_at(p, idx);
        auto s2 = antipode_power(AlgebraElement::monomial(params, m), 2);
        auto twisted = conjugation_twist(params, cert.d, mod_norm(-cert.c, p.N), m);
        if (s2 != twisted) {
            if (witness) *witness = m;
            return false;
        }
    }
    return true;
}

namespace {

struct TupleOutcome {
    std::uint64_t valid = 0, pii_free = 0, modular_free = 0, disagreements = 0;
    std::optional<std::array<std::int64_t, 5>> counterexample;

    void absorb(const TupleOutcome& o) {
        valid += o.valid;
        pii_free += o.pii_free;
        modular_free += o.modular_free;
        disagreements += o.disagreements;
        if (o.counterexample &&
            (!counterexample || *o.counterexample < *counterexample))
            counterexample = o.counterexample;
    }
};

void check_tuple(std::int64_t N, std::int64_t a1, std::int64_t a2, std::int64_t b1,
                 std::int64_t b2, TupleOutcome& out) {
    ++out.valid;
    bool any = false, modular = false;
    oracle_scan(N, a1, a2, b1, b2, any, modular);
    if (!any) ++out.pii_free;
    if (!modular) ++out.modular_free;
    if (classify_raw(N, a1, a2, b1, b2).has_pair != any) {
        ++out.disagreements;
        if (!out.counterexample) out.counterexample = {{N, a1, a2, b1, b2}};
    }
}

TupleOutcome scan_exhaustive_slice(std::int64_t N, std::int64_t a1_begin,
                                   std::int64_t a1_end) {
    TupleOutcome out;
    for (std::int64_t a1 = a1_begin; a1 < a1_end; ++a1)
        for (std::int64_t a2 = 0; a2 < N; ++a2)
            for (std::int64_t b1 = 0; b1 < N; ++b1)
                for (std::int64_t b2 = 0; b2 < N; ++b2)
                    if (is_valid_tuple(N, a1, a2, b1, b2))
                        check_tuple(N, a1, a2, b1, b2, out);
    return out;
}

TupleOutcome scan_sampled(std::int64_t N, std::uint64_t seed) {
    TupleOutcome out;
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(N)));
    std::uniform_int_distribution<std::int64_t> dist(0, N - 1);
    std::int64_t accepted = 0;
    // Rejection sampling; the valid fraction is bounded well away from zero.
    std::uint64_t guard = 0;
    while (accepted < kSamplesPerN && ++guard < std::uint64_t(1) << 32) {
        const std::int64_t a1 = dist(rng), a2 = dist(rng), b1 = dist(rng),
                           b2 = dist(rng);
        if (!is_valid_tuple(N, a1, a2, b1, b2)) continue;
        ++accepted;
        check_tuple(N, a1, a2, b1, b2, out);
    }
    return out;
}

}  // namespace

CrossValidationReport cross_validate(std::int64_t maxN, ScanMode mode,
                                     std::uint64_t seed, int parallelism) {
    if (maxN < 2) throw std::invalid_argument("cross_validate: maxN must be >= 2");
    if (parallelism < 1) parallelism = 1;
    CrossValidationReport report;
    for (std::int64_t N = 2; N <= maxN; ++N) {
        const bool exhaustive = mode == ScanMode::Exhaustive || N <= kExhaustiveCutoff;
        TupleOutcome out;
        if (!exhaustive) {
            out = scan_sampled(N, seed);
        } else if (parallelism == 1 || N < 4) {
            out = scan_exhaustive_slice(N, 0, N);
        } else {
            std::vector<std::future<TupleOutcome>> futures;
            const std::int64_t chunk = (N + parallelism - 1) / parallelism;
            for (std::int64_t begin = 0; begin < N; begin += chunk)
                futures.push_back(std::async(std::launch::async,
                                             scan_exhaustive_slice, N, begin,
                                             std::min(begin + chunk, N)));
            for (auto& f : futures) out.absorb(f.get());
        }
        report.rows.push_back({N, out.valid, out.pii_free, out.modular_free,
                               out.disagreements});
        if (out.disagreements > 0) {
            report.ok = false;
            report.counterexample = out.counterexample;
            return report;
        }
    }
    return report;
}

}  // namespace qtaft
