#pragma once

#include "fracineq/funcatalog.hpp"
#include "fracineq/fracint.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fracineq {

/// Stable theorem vocabulary. E6..E9 are the fractional bounds, the rest the
/// classical results they generalise. E8printed is a diagnostic only.
enum class TheoremId {
    E6,
    E7,
    E8proof,
    E8printed,
    E9,
    e1,
    e13_lower,
    e13_upper,
    e14,
    t5_146,
    t6_147,
};

std::string_view to_string(TheoremId id);
std::optional<TheoremId> parse_theorem(std::string_view name);
/// Every id, in declaration order.
const std::vector<TheoremId>& all_theorems();
bool is_fractional(TheoremId id);

/// Which parameters a theorem reads; the rest are blanked (NaN) in reports.
struct ParamUsage {
    bool alpha, s, p, q, x;
};
ParamUsage param_usage(TheoremId id);

enum class ReportStatus { Asserted, Skipped, Informational };
std::string_view to_string(ReportStatus status);

inline constexpr double kMarginTol = 1e-9;

struct InequalityReport {
    TheoremId theorem = TheoremId::E6;
    std::string function;
    FracParams prm;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0; // rhs − lhs
    bool holds = true;
    double quad_error_budget = 0.0;
    ReportStatus status = ReportStatus::Asserted;
    std::string note;
};

/// margin ≥ −max(margin_tol, 10·budget).
bool margin_holds(double margin, double budget, double margin_tol = kMarginTol);

/// |Lemma left-hand side|, shared by E6–E9.
Estimate lhs_frac(const Function1D& f, const FracParams& prm, const QuadratureConfig& cfg);

// Closed-form right-hand sides. Each throws ConfigError when a parameter it
// needs (M, p, q) is absent.
double rhs_thm1(const FracParams& prm);
double rhs_thm2(const FracParams& prm);
/// Bound derived in the proof of the power-mean theorem; at q = 1 it is computed
/// along the same path as rhs_thm1 and equals it bit for bit.
double rhs_thm3(const FracParams& prm);
/// The bound as printed in the statement of the power-mean theorem (a copy of
/// rhs_thm2). Diagnostic only.
double rhs_e8_printed(const FracParams& prm);
/// Refuses (HypothesisError) unless `cert` is a passing s-concavity certificate
/// of |f′|^q at the same s and q.
double rhs_thm4(const Function1D& f, const FracParams& prm, const ConvexityCertificate& cert);
double rhs_thm4_formula(const Function1D& f, const FracParams& prm);

/// |f(x) − (1/(b−a))∫_a^b f|.
Estimate lhs_ostrowski(const Function1D& f, const FracParams& prm, const QuadratureConfig& cfg);
double rhs_ostrowski(const FracParams& prm);        // e1
double rhs_classical_convex(const FracParams& prm);   // e14
double rhs_classical_holder(const FracParams& prm);   // Hölder form, target of the E7 reduction
double rhs_classical_power_mean(const FracParams& prm); // t5_146
double rhs_classical_concave(const Function1D& f, const FracParams& prm); // t6_147

/// Hermite–Hadamard sides for s-convex f: 2^(s−1) f((a+b)/2) ≤ mean ≤ (f(a)+f(b))/(s+1).
struct HermiteHadamardSides {
    double lower;
    Estimate mean;
    double upper;
};
HermiteHadamardSides hermite_hadamard(const Function1D& f, double a, double b, double s,
                                      const QuadratureConfig& cfg);

/// Which theorem hypotheses were certified for f on [a,b] at (s, q).
struct Hypotheses {
    bool abs_deriv_sconvex = false; // |f′| s-convex
    bool pow_sconvex = false;       // |f′|^q s-convex
    bool pow_sconcave = false;      // |f′|^q s-concave
    bool value_sconvex = false;     // f s-convex and f ≥ 0
};

/// Runs the certifier for every hypothesis; f must already be restricted to [a,b] ⊂ [0,∞).
Hypotheses certify_hypotheses(const Function1D& f, double s, std::optional<double> q,
                              const CertifyOptions& opts = {});

/// Evaluates one theorem at one point. `lhs_cache` may carry a precomputed
/// lhs_frac (fractional ids) or lhs_ostrowski (e1, e14, t5_146, t6_147) value.
/// Uncertified hypotheses produce a Skipped report that still carries the
/// informational sides.
InequalityReport evaluate(TheoremId id, const Function1D& f, const FracParams& prm,
                          const Hypotheses& hyp, const QuadratureConfig& cfg,
                          const Estimate* lhs_cache = nullptr, double margin_tol = kMarginTol);

/// Runs every classical bound at one point, one report each.
std::vector<InequalityReport> classical_suite(const Function1D& f, const FracParams& prm,
                                              const Hypotheses& hyp, const QuadratureConfig& cfg);

struct ReductionGrid {
    std::vector<double> s_values{0.25, 0.5, 0.75, 1.0};
    std::vector<std::pair<double, double>> intervals{{0.0, 1.0}, {0.2, 0.9}};
    int x_points = 9;
    std::vector<std::pair<double, double>> pq_pairs{{2.0, 2.0}, {3.0, 1.5}, {1.25, 5.0}};
    std::vector<double> q_values{1.0, 2.0, 3.0}; // power-mean theorem (p unused)
    std::vector<double> M_values{1.0, 2.5};
    std::vector<std::string> functions; // empty: every catalog entry defined on the interval
};

/// Max |fractional RHS at α = 1 − classical RHS| over the grid, for E6, E7,
/// E8proof or E9. Pure closed-form arithmetic.
double reduction_check(TheoremId id, const ReductionGrid& grid = {});

} // namespace fracineq
