#pragma once

#include "qtaft/dual.hpp"

#include <optional>

namespace qtaft {

/// The left integral (sum_m g^m) x^{Nx-1} y^{Ny-1}; its defining property
/// h Lambda = eps(h) Lambda is re-verified on the generators before
/// returning (a failure would be an internal bug).
AlgebraElement left_integral(const ParamsPtr& params);

/// The left integral of the dual, (sum_i xi^i) psi^{Nx-1} phi^{Ny-1}.
Functional dual_integral(const ParamsPtr& params);

/// Exponents (e_xi, e_g) of the distinguished group-likes xi^{e_xi} of H
/// and g^{e_g} of H°.  Both are computed from the one-sided action on the
/// integrals and cross-checked against the closed forms
/// b1(Nx-1) + b2(Ny-1) and a1(Nx-1) + a2(Ny-1) mod N; disagreement
/// throws.  The closed forms collapse to -(b1+b2) and -(a1+a2) exactly
/// when b1 Nx = b2 Ny = 0 mod N.
std::pair<std::int64_t, std::int64_t> distinguished_grouplikes(const ParamsPtr& params);

/// Quasitriangularity criterion: N even, Nx = Ny = 2 and a1 = a2 = N/2.
bool is_quasitriangular(const GtaParameters& p);

/// The twist h -> beta(h_(3)) beta^{-1}(h_(1)) l h_(2) l^{-1} with
/// l = g^{l_exp} and beta = xi^{beta_exp}, on a basis monomial.
AlgebraElement conjugation_twist(const ParamsPtr& params, std::int64_t l_exp,
                                 std::int64_t beta_exp, const BasisMonomial& m);

/// Checks S^4 = alpha(h_(3)) alpha^{-1}(h_(1)) g_d^{-1} h_(2) g_d on the
/// full basis, with (g_d, alpha) the distinguished group-likes.
bool verify_radford_s4(const ParamsPtr& params,
                       std::optional<BasisMonomial>* witness = nullptr);

struct StructureReport {
    AlgebraElement integral;
    Functional dual_integral;
    std::int64_t e_xi = 0;  // alpha = xi^{e_xi}
    std::int64_t e_g = 0;   // distinguished group-like of H° is g^{e_g}
    bool unimodular = false;
    bool dual_unimodular = false;
    bool quasitriangular = false;
    bool radford_ok = false;
};

StructureReport structure_report(const ParamsPtr& params);

}  // namespace qtaft
