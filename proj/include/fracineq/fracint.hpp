#pragma once

#include "fracineq/execution.hpp"
#include "fracineq/funcatalog.hpp"
#include "fracineq/quadrature.hpp"

#include <optional>
#include <utility>

namespace fracineq {

/// Parameter tuple shared by the identity and every inequality.
struct FracParams {
    double a = 0.0;
    double b = 1.0;
    double x = 0.5;
    double alpha = 1.0;
    double s = 1.0;
    std::optional<double> p;
    std::optional<double> q;
    std::optional<double> M;

    /// a < b, x ∈ [a,b], α > 0, s ∈ (0,1], p > 1, q ≥ 1, M ≥ 0, and
    /// |1/p + 1/q − 1| ≤ 1e-12 when both exponents are present.
    void validate() const;
};

/// Conjugate exponent p/(p−1); +inf for p == 1.
double conjugate_exponent(double p);

namespace fracint {

/// (1/Γ(α)) ∫ |t − c|^(α−1) f(t) dt over the interval between the singular
/// endpoint c and `other`. With L = |other − c| the substitution
/// u = (|t − c|/L)^α turns this into L^α/Γ(α+1) ∫₀¹ f(c ± L·u^(1/α)) du,
/// which has a bounded integrand for every α > 0.
///
/// The rule in `cfg` selects the engine: adaptive Gauss–Kronrod on the
/// transformed integrand, Gauss–Jacobi on the weight y^(α−1), or the
/// 10⁶-panel midpoint oracle on the transformed integrand.
Estimate endpoint_singular(const Function1D& f, double c, double other, double alpha,
                           const QuadratureConfig& cfg);

/// Left-sided Riemann–Liouville integral J_{a+}^α f(x); singular at t = x.
Estimate rl_left(const Function1D& f, double a, double x, double alpha, const QuadratureConfig& cfg);

/// Right-sided Riemann–Liouville integral J_{b−}^α f(x); singular at t = x.
Estimate rl_right(const Function1D& f, double x, double b, double alpha, const QuadratureConfig& cfg);

/// The two operators of the Ostrowski-type identity:
///   first  = (1/Γ(α)) ∫_a^x (t − a)^(α−1) f(t) dt
///   second = (1/Γ(α)) ∫_x^b (b − t)^(α−1) f(t) dt
/// At x = a the first is 0, at x = b the second is 0.
std::pair<Estimate, Estimate> lemma_pair(const Function1D& f, const FracParams& prm,
                                         const QuadratureConfig& cfg);

/// Midpoint oracle for endpoint_singular: the same transformed integrand,
/// fixed composite midpoint rule with `panels` panels, no adaptivity.
Estimate oracle(const Function1D& f, double c, double other, double alpha,
                long panels = quad::kOraclePanels, Execution exec = Execution::Serial);

} // namespace fracint
} // namespace fracineq
