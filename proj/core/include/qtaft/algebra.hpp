#pragma once

#include "qtaft/cyclotomic.hpp"
#include "qtaft/parameters.hpp"

#include <array>
#include <compare>
#include <map>
#include <utility>

namespace qtaft {

/// PBW basis monomial x^i y^j g^l with 0 <= i < Nx, 0 <= j < Ny, 0 <= l < N.
struct BasisMonomial {
    std::int32_t i = 0, j = 0, l = 0;

    auto operator<=>(const BasisMonomial&) const = default;

    std::string to_string() const;
};

/// Linear index of a monomial, row-major in (i, j, l).
inline std::int64_t monomial_index(const GtaParameters& p, const BasisMonomial& m) {
    return (static_cast<std::int64_t>(m.i) * p.Ny + m.j) * p.N + m.l;
}

inline BasisMonomial monomial_at(const GtaParameters& p, std::int64_t index) {
    return BasisMonomial{static_cast<std::int32_t>(index / (p.Ny * p.N)),
                         static_cast<std::int32_t>(index / p.N % p.Ny),
                         static_cast<std::int32_t>(index % p.N)};
}

/// Structural product of two basis monomials: either zero (nilpotent power
/// reached) or a single monomial scaled by q^q_exp.
struct MonomialProduct {
    bool zero = false;
    BasisMonomial m;
    std::int64_t q_exp = 0;  // exponent of q, already reduced mod N
};

MonomialProduct monomial_product(const GtaParameters& p, const BasisMonomial& u,
                                 const BasisMonomial& v);

/// A monomial carried with a sign and a power of q; closed under
/// multiplication, used for antipode images.
struct ScaledMonomial {
    bool zero = false;
    int sign = 1;
    std::int64_t q_exp = 0;
    BasisMonomial m;
};

ScaledMonomial scaled_product(const GtaParameters& p, const ScaledMonomial& u,
                              const ScaledMonomial& v);

/// Sparse cyclotomic-coefficient vector over the PBW basis of H.
class AlgebraElement {
public:
    AlgebraElement() = default;
    explicit AlgebraElement(ParamsPtr params) : params_(std::move(params)) {}

    static AlgebraElement unit(ParamsPtr params);
    static AlgebraElement monomial(ParamsPtr params, BasisMonomial m);
    static AlgebraElement monomial(ParamsPtr params, BasisMonomial m,
                                   CyclotomicScalar coeff);
    static AlgebraElement gen_g(ParamsPtr params) { return monomial(params, {0, 0, 1}); }
    static AlgebraElement gen_x(ParamsPtr params) { return monomial(params, {1, 0, 0}); }
    static AlgebraElement gen_y(ParamsPtr params) { return monomial(params, {0, 1, 0}); }

    const ParamsPtr& params() const { return params_; }
    const std::map<BasisMonomial, CyclotomicScalar>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    /// Adds c * m, pruning the term if the sum cancels.
    void add_term(const BasisMonomial& m, const CyclotomicScalar& c);

    AlgebraElement operator+(const AlgebraElement& rhs) const;
    AlgebraElement operator-(const AlgebraElement& rhs) const;
    AlgebraElement operator*(const AlgebraElement& rhs) const;
    AlgebraElement operator*(const CyclotomicScalar& s) const;
    AlgebraElement operator-() const;
    bool operator==(const AlgebraElement& rhs) const;
    bool operator!=(const AlgebraElement& rhs) const { return !(*this == rhs); }

    std::string to_string() const;

private:
    ParamsPtr params_;
    std::map<BasisMonomial, CyclotomicScalar> terms_;
};

/// Sparse element of the tensor square H (x) H.
class TensorElement {
public:
    using Key = std::pair<BasisMonomial, BasisMonomial>;

    TensorElement() = default;
    explicit TensorElement(ParamsPtr params) : params_(std::move(params)) {}

    static TensorElement unit(ParamsPtr params);

    const ParamsPtr& params() const { return params_; }
    const std::map<Key, CyclotomicScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Key& k, const CyclotomicScalar& c);

    TensorElement operator+(const TensorElement& rhs) const;
    TensorElement operator-(const TensorElement& rhs) const;
    /// Componentwise product (a (x) b)(c (x) d) = ac (x) bd.
    TensorElement operator*(const TensorElement& rhs) const;
    bool operator==(const TensorElement& rhs) const;
    bool operator!=(const TensorElement& rhs) const { return !(*this == rhs); }

private:
    ParamsPtr params_;
    std::map<Key, CyclotomicScalar> terms_;
};

/// Sparse element of H (x) H (x) H; only needs addition and comparison.
class TripleTensor {
public:
    using Key = std::array<BasisMonomial, 3>;

    TripleTensor() = default;
    explicit TripleTensor(ParamsPtr params) : params_(std::move(params)) {}

    const ParamsPtr& params() const { return params_; }
    const std::map<Key, CyclotomicScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Key& k, const CyclotomicScalar& c);

    bool operator==(const TripleTensor& rhs) const;
    bool operator!=(const TripleTensor& rhs) const { return !(*this == rhs); }

private:
    ParamsPtr params_;
    std::map<Key, CyclotomicScalar> terms_;
};

CyclotomicScalar counit(const AlgebraElement& u);

/// Delta on a basis monomial, served from a per-parameter table that is
/// built once as Delta(x)^i Delta(y)^j inside the tensor square; the
/// group-like factor g^l is appended per call.
TensorElement coproduct_monomial(const ParamsPtr& params, const BasisMonomial& m);

TensorElement coproduct(const AlgebraElement& u);

/// (Delta (x) id) Delta on a basis monomial, expanded on demand.
TripleTensor triple_coproduct_monomial(const ParamsPtr& params, const BasisMonomial& m);

TripleTensor triple_coproduct(const AlgebraElement& u);

/// Antipode image of a basis monomial: S(g)^l S(y)^j S(x)^i, always a
/// single signed scaled monomial.
ScaledMonomial antipode_monomial(const GtaParameters& p, const BasisMonomial& m);
ScaledMonomial antipode_inverse_monomial(const GtaParameters& p, const BasisMonomial& m);

AlgebraElement antipode(const AlgebraElement& u);
AlgebraElement antipode_inverse(const AlgebraElement& u);
AlgebraElement antipode_power(const AlgebraElement& u, std::int64_t k);

}  // namespace qtaft
