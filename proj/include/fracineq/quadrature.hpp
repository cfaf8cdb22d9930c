#pragma once

#include "fracineq/execution.hpp"

#include <functional>
#include <string_view>
#include <optional>
#include <vector>

namespace fracineq {

using RealFn = std::function<double(double)>;

enum class QuadRule { TransformedAdaptive, GaussJacobi, OracleMidpoint };

std::string_view to_string(QuadRule rule);
std::optional<QuadRule> parse_quad_rule(std::string_view name);

struct QuadratureConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int max_subdivisions = 2000;
    QuadRule rule = QuadRule::TransformedAdaptive;

    /// Throws ConfigError when tolerances are non-positive or max_subdivisions < 8.
    void validate() const;
};

/// A quadrature value together with its (absolute) error estimate.
struct Estimate {
    double value = 0.0;
    double error = 0.0;
};

namespace quad {

inline constexpr long kOraclePanels = 1'000'000;

/// One 21-point Gauss–Kronrod panel. `error` is |K21 − G10|.
Estimate gauss_kronrod21(const RealFn& f, double lo, double hi);

/// Globally adaptive Gauss–Kronrod integration of f over [lo, hi]: the panel
/// with the largest error estimate is bisected until the summed estimate
/// drops below max(abs_tol, rel_tol·|I|). Throws ConvergenceError (carrying
/// the best estimate) when max_subdivisions is exhausted.
Estimate adaptive(const RealFn& f, double lo, double hi, const QuadratureConfig& cfg);

/// Gauss–Jacobi rule on [0, 1] for the weight y^exponent (exponent > −1).
struct JacobiRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
JacobiRule gauss_jacobi_rule(int n, double exponent);

/// ∫₀¹ y^exponent g(y) dy by Gauss–Jacobi, doubling n from 16 until two
/// successive rules agree to tolerance.
Estimate gauss_jacobi(const RealFn& g, double exponent, const QuadratureConfig& cfg);

/// Composite midpoint rule with `panels` panels, summed in fixed blocks so
/// serial and parallel execution give identical bits.
double midpoint(const RealFn& f, double lo, double hi, long panels,
                Execution exec = Execution::Serial);

/// Midpoint rule with N panels and a Richardson error estimate |M_N − M_{N/2}|/3.
Estimate midpoint_estimate(const RealFn& f, double lo, double hi, long panels = kOraclePanels,
                           Execution exec = Execution::Serial);

} // namespace quad
} // namespace fracineq
