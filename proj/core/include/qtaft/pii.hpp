#pragma once

#include "qtaft/structure.hpp"

#include <optional>
#include <vector>

namespace qtaft {

/// A solution (c, d) of a1 c + b1 d = a1 b1, a2 c + b2 d = a2 b2 mod N,
/// encoding the pair (l, beta) = (g^d, xi^{-c}); modular iff c d = 0 mod N.
struct PiiCertificate {
    std::int64_t c = 0, d = 0;
    bool modular = false;

    bool operator==(const PiiCertificate&) const = default;
};

/// All certificates in lexicographic (c, d) order.
std::vector<PiiCertificate> oracle_pairs(const GtaParameters& p);

/// The closed-form certificate (2^{-1}(b1+b2), 2^{-1}(a1+a2)) for odd N;
/// throws std::invalid_argument for even N.
PiiCertificate odd_part_solution(const GtaParameters& p);

/// The 2-adic data of the parameters modulo 2^n and the decision of the
/// no-pair criterion.  Powers are undefined (nullopt) when the matching
/// coefficient is 0 mod 2^n.
struct ClassifierReport {
    std::int64_t n = 0;          // 2-adic valuation of N
    std::int64_t j = 0;          // odd part, N = 2^n j
    std::optional<std::int64_t> pow_a1, pow_a2, pow_b1, pow_b2;
    std::array<std::array<std::int64_t, 2>, 2> mu{};  // row i: (a_i, b_i) coefficients
    std::int64_t det_mu = 0;     // mod 2^n
    std::int64_t tau = 0;
    std::int64_t nu = 0;         // odd or zero, 2^tau nu = det mu mod 2^n
    bool swapped = false;        // presentation swapped so pow_a1 <= pow_a2
    bool has_pair = false;
    std::string reason;
};

ClassifierReport classify(const GtaParameters& p);

/// Classifier on a raw (already validated) tuple; used by scan loops.
ClassifierReport classify_raw(std::int64_t N, std::int64_t a1, std::int64_t a2,
                              std::int64_t b1, std::int64_t b2);

/// Full-basis check of the antipode condition: the twist of (g^d, xi^{-c})
/// must equal S^2 on every basis monomial, not only on generators.
bool verify_certificate(const ParamsPtr& params, const PiiCertificate& cert,
                        std::optional<BasisMonomial>* witness = nullptr);

enum class ScanMode { Exhaustive, Sampled };

inline constexpr std::uint64_t kDefaultScanSeed = 12345;
/// In Sampled mode, N above this bound is covered by fixed-seed samples.
inline constexpr std::int64_t kExhaustiveCutoff = 24;
inline constexpr std::int64_t kSamplesPerN = 1000;

struct ScanRow {
    std::int64_t N = 0;
    std::uint64_t valid_tuples = 0;
    std::uint64_t pii_free = 0;
    std::uint64_t modular_free = 0;  // tuples with no modular certificate
    std::uint64_t disagreements = 0;
};

struct CrossValidationReport {
    std::vector<ScanRow> rows;
    bool ok = true;
    std::optional<std::array<std::int64_t, 5>> counterexample;
};

/// Asserts classify(...) <=> oracle nonemptiness for every tuple covered:
/// exhaustively for each N in Exhaustive mode, exhaustively up to
/// kExhaustiveCutoff and on kSamplesPerN fixed-seed samples beyond it in
/// Sampled mode.  Stops at the first disagreement.
CrossValidationReport cross_validate(std::int64_t maxN, ScanMode mode,
                                     std::uint64_t seed = kDefaultScanSeed,
                                     int parallelism = 1);

}  // namespace qtaft
