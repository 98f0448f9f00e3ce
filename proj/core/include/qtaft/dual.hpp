#pragma once

#include "qtaft/algebra.hpp"

#include <optional>
#include <vector>

namespace qtaft {

/// Element of the dual H°, stored as a dense value table on the PBW basis
/// and multiplied by convolution.
class Functional {
public:
    Functional() = default;
    explicit Functional(ParamsPtr params);

    static Functional counit(ParamsPtr params);

    const ParamsPtr& params() const { return params_; }

    const CyclotomicScalar& value(const BasisMonomial& m) const;
    void set_value(const BasisMonomial& m, CyclotomicScalar v);

    CyclotomicScalar evaluate(const AlgebraElement& u) const;

    bool is_zero() const;

    Functional operator+(const Functional& rhs) const;
    Functional operator*(const CyclotomicScalar& s) const;
    bool operator==(const Functional& rhs) const;
    bool operator!=(const Functional& rhs) const { return !(*this == rhs); }

private:
    ParamsPtr params_;
    std::vector<CyclotomicScalar> values_;  // indexed by monomial_index
};

/// The generators xi, psi, phi of H° in that order.
struct DualGenerators {
    Functional xi, psi, phi;
};

DualGenerators dual_generators(const ParamsPtr& params);

/// Convolution product (f * h)(m) = sum f(m_(1)) h(m_(2)).
Functional convolve(const Functional& f, const Functional& h);

/// The product xi^r * psi^s * phi^t; ranges 0 <= r < N, 0 <= s < Nx,
/// 0 <= t < Ny are enforced.
Functional functional_monomial(const ParamsPtr& params, std::int64_t r,
                               std::int64_t s, std::int64_t t);

/// All N*Nx*Ny functionals xi^r psi^s phi^t, indexed like monomial_index
/// applied to (i, j, l) = (s, t, r).  Built incrementally by convolution
/// and cached per parameter tuple.
std::shared_ptr<const std::vector<Functional>> functional_basis(const ParamsPtr& params);

struct DualityReport {
    bool ok = false;
    std::array<std::int64_t, 4> dual_tuple{};  // (b1, b2, a1, a2)
    std::vector<std::string> failures;          // failed identities with witness
};

/// Exact verification of the dual presentation: the order/nilpotency of
/// xi, psi, phi, the three commutation relations, and the diagonal support
/// of the pairing against the elements (sum_m q^{i m} g^m) x^j y^l.
DualityReport check_duality(const ParamsPtr& params);

}  // namespace qtaft
