#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qtaft {

using Int = boost::multiprecision::cpp_int;

/// Dense integer polynomial, coeffs[i] is the coefficient of X^i.
/// Normalised: no trailing zero coefficients (the zero polynomial is empty).
using IntPoly = std::vector<Int>;

/// The N-th cyclotomic polynomial Phi_N, monic over the integers.
/// Computed by exact division of X^N - 1 by the Phi_d of the proper
/// divisors d of N; results are cached per N.
const IntPoly& cyclotomic_polynomial(std::int64_t n);

/// Euler totient, equals deg Phi_N.
std::int64_t euler_totient(std::int64_t n);

/// An element of Z[zeta_N] in its unique representation modulo Phi_N.
/// Scalars of different order must never meet in one arithmetic call;
/// doing so throws std::invalid_argument.
class CyclotomicScalar {
public:
    CyclotomicScalar() : order_(1), coeffs_(1) {}

    static CyclotomicScalar zero(std::int64_t order);
    static CyclotomicScalar one(std::int64_t order);
    static CyclotomicScalar from_integer(std::int64_t order, const Int& value);

    /// Canonical embedding of q^e, q the primitive N-th root of unity.
    /// The exponent may be any integer; it is reduced modulo N first.
    static CyclotomicScalar root_power(std::int64_t order, std::int64_t exponent);

    std::int64_t order() const { return order_; }
    const std::vector<Int>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;

    CyclotomicScalar operator+(const CyclotomicScalar& rhs) const;
    CyclotomicScalar operator-(const CyclotomicScalar& rhs) const;
    CyclotomicScalar operator-() const;
    CyclotomicScalar operator*(const CyclotomicScalar& rhs) const;
    CyclotomicScalar& operator+=(const CyclotomicScalar& rhs);
    CyclotomicScalar& operator-=(const CyclotomicScalar& rhs);
    CyclotomicScalar& operator*=(const CyclotomicScalar& rhs);

    bool operator==(const CyclotomicScalar& rhs) const;
    bool operator!=(const CyclotomicScalar& rhs) const { return !(*this == rhs); }

    std::string to_string() const;

private:
    explicit CyclotomicScalar(std::int64_t order, std::vector<Int> coeffs)
        : order_(order), coeffs_(std::move(coeffs)) {}

    void check_order(const CyclotomicScalar& rhs) const;

    std::int64_t order_;
    std::vector<Int> coeffs_;  // length deg Phi_N, remainder mod Phi_N
};

/// Gaussian binomial [n choose k] at base q^e inside Z[zeta_N], via the
/// recursion [n,k]_t = [n-1,k-1]_t + t^k [n-1,k]_t.  Throws for k > n.
CyclotomicScalar gauss_binomial(std::int64_t n, std::int64_t k, std::int64_t e,
                                std::int64_t order);

}  // namespace qtaft
