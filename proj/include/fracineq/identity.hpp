#pragma once

#include "fracineq/fracint.hpp"

#include <utility>

namespace fracineq {

inline constexpr double kIdentityTol = 1e-8;

struct IdentityResidual {
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0; // lhs − rhs
    double scale = 1.0;    // max(1, |lhs|, |rhs|)
    double rel_residual = 0.0;
    /// Propagated quadrature error, relative to `scale` (same units as rel_residual).
    double quad_error_budget = 0.0;

    bool passed(double identity_tol = kIdentityTol) const;
};

/// Builds a residual record from two sides and their absolute error estimates.
IdentityResidual make_residual(double lhs, double rhs, double abs_error);

// Sign-oriented so that E1 = E4 − E5: `lhs` is the side carrying f(x) and the
// fractional integral, `rhs` the side carrying ∫₀¹ t^α f′(·) dt.

/// ((x−a)^α + (b−x)^α)/(b−a)·f(x) − Γ(α+1)/(b−a)·[J_{x−}^α f(a) + J_{x+}^α f(b)]
/// against (x−a)^(α+1)/(b−a) ∫₀¹ t^α f′(tx+(1−t)a) dt − (b−x)^(α+1)/(b−a) ∫₀¹ t^α f′(tx+(1−t)b) dt.
IdentityResidual check_e1(const Function1D& f, const FracParams& prm, const QuadratureConfig& cfg);

/// The two one-sided halves of check_e1, each verified separately.
std::pair<IdentityResidual, IdentityResidual> check_e4_e5(const Function1D& f, const FracParams& prm,
                                                          const QuadratureConfig& cfg);

struct ClassicalLemmaResidual : IdentityResidual {
    /// max(|lhs − lhs_E1|, |rhs − rhs_E1|) against check_e1 at α = 1.
    double e1_deviation = 0.0;
};

/// f(x) − (1/(b−a))∫_a^b f against (x−a)²/(b−a) ∫₀¹ t f′(tx+(1−t)a) dt − (b−x)²/(b−a) ∫₀¹ t f′(tx+(1−t)b) dt.
ClassicalLemmaResidual check_classical_lemma(const Function1D& f, double a, double b, double x,
                                             const QuadratureConfig& cfg);

/// ∫₀¹ t^α f′(t·x + (1−t)·end) dt using the rule selected in cfg (no substitution for the
/// adaptive rule; the integrand is bounded for α > 0).
Estimate kernel_derivative_integral(const Function1D& f, double x, double end, double alpha,
                                    const QuadratureConfig& cfg);

} // namespace fracineq
