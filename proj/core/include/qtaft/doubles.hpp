#pragma once

#include "qtaft/pii.hpp"

#include <optional>
#include <vector>

namespace qtaft {

/// Multiplication convention of the algebra on H° (x) H: the Drinfeld
/// double evaluates the outer dual legs against h_(1) and S(h_(3)), the
/// anti-Drinfeld double against h_(1) and S^{-1}(h_(3)).
enum class DoubleKind { Drinfeld, AntiDrinfeld };

/// Index (r, s, t) of the dual basis functional xi^r psi^s phi^t, with
/// 0 <= r < N, 0 <= s < Nx, 0 <= t < Ny.
struct DualIndex {
    std::int32_t r = 0, s = 0, t = 0;

    auto operator<=>(const DualIndex&) const = default;

    std::string to_string() const;
};

/// Sparse element of D(H) or A(H) on the basis xi^r psi^s phi^t (x) m.
class DoubleElement {
public:
    using Key = std::pair<DualIndex, BasisMonomial>;

    DoubleElement() = default;
    DoubleElement(ParamsPtr params, DoubleKind kind)
        : params_(std::move(params)), kind_(kind) {}

    /// The unit eps (x) 1.
    static DoubleElement unit(ParamsPtr params, DoubleKind kind);
    static DoubleElement basis(ParamsPtr params, DoubleKind kind, DualIndex a,
                               BasisMonomial m);

    const ParamsPtr& params() const { return params_; }
    DoubleKind kind() const { return kind_; }
    const std::map<Key, CyclotomicScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Adds c * (a (x) m), pruning the term if the sum cancels; range-checks
    /// the dual index.
    void add_term(const Key& k, const CyclotomicScalar& c);

    DoubleElement operator+(const DoubleElement& rhs) const;
    DoubleElement operator-(const DoubleElement& rhs) const;
    DoubleElement operator*(const CyclotomicScalar& s) const;
    bool operator==(const DoubleElement& rhs) const;
    bool operator!=(const DoubleElement& rhs) const { return !(*this == rhs); }

    std::string to_string() const;

private:
    ParamsPtr params_;
    DoubleKind kind_ = DoubleKind::Drinfeld;
    std::map<Key, CyclotomicScalar> terms_;
};

/// (alpha (x) g)(beta (x) h) =
///   alpha_(1)(h_(1)) alpha_(3)(S^{+-1}(h_(3))) beta alpha_(2) (x) g h_(2),
/// extended bilinearly.  The dual-side arithmetic runs inside the Taft
/// presentation of H° given by xi, psi, phi; throws on params or kind
/// mismatch.
DoubleElement double_multiply(const DoubleElement& u, const DoubleElement& v);

/// The diagonal scalar of the map f_{(g^d, xi^{-c})} on the basis element
/// xi^r psi^s phi^t (x) x^i y^j g^l, namely
/// q^{-((r + b1 s + b2 t) d + (a1 i + a2 j + l) c)}.  With negated (c, d)
/// this is the scalar of the inverse map.
CyclotomicScalar triangular_map_scalar(const GtaParameters& p, std::int64_t c,
                                       std::int64_t d, const DoubleElement::Key& k);

struct DoublePairWitness {
    DoubleElement::Key u, v;
};

/// Checks that f(u v) = f(u) f(v) for the map f = f_{(g^d, xi^{-c})} of the
/// certificate, over all pairs of basis elements, with u v multiplied in
/// A(H) and f(u) f(v) in D(H); also checks f^{-1} f = f f^{-1} = id on the
/// basis.  The pair condition is decided exactly by a factored termwise
/// comparison of the two product kernels (the parts depending on the other
/// tensor factors are common to both structures), cross-checked directly on
/// a fixed sample of full pairs.  A false return carries an offending pair.
bool pii_isomorphism_check(const ParamsPtr& params, const PiiCertificate& cert,
                           std::optional<DoublePairWitness>* witness = nullptr);

struct TriangularSearchResult {
    /// The (c, d) whose maps f_{(g^d, xi^{-c})}: A(H) -> D(H) were not
    /// eliminated by any processed pair.
    std::vector<std::pair<std::int64_t, std::int64_t>> survivors;
    std::uint64_t pairs_checked = 0;
    /// True when every basis pair was processed, certifying the surviving
    /// maps as multiplicative.  An empty survivor list is definitive
    /// either way.
    bool exhaustive = false;
};

/// Finite search over all N^2 candidate pairs (c, d), eliminating a
/// candidate as soon as some product pair contradicts multiplicativity of
/// its triangular map.  Generator pairs are processed first, which
/// typically empties the candidate set of a pair-free algebra after a
/// handful of products; the remaining basis pairs follow in order of
/// nilpotent weight.  Stops once every candidate is eliminated, or after
/// max_pairs products when max_pairs > 0 (leaving exhaustive false).
TriangularSearchResult triangular_iso_search(const ParamsPtr& params,
                                             std::uint64_t max_pairs = 0);

}  // namespace qtaft
