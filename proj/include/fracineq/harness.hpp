#pragma once

#include "fracineq/bounds.hpp"
#include "fracineq/execution.hpp"
#include "fracineq/identity.hpp"

#include "json.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace fracineq {

struct SweepConfig {
    std::vector<std::string> functions;
    std::vector<double> alphas;
    std::vector<double> s_values;
    std::vector<std::pair<double, double>> pq_pairs;
    int x_points = 11;              // uniform grid on [a,b] including both ends
    std::vector<double> x_values;   // explicit points; overrides x_points when non-empty
    double a = 0.0;
    double b = 1.0;
    double identity_tol = kIdentityTol;
    double margin_tol = kMarginTol;
    double cert_tol = 1e-9;
    int cert_grid = 33;
    QuadratureConfig quad;
    std::vector<TheoremId> theorems;
    std::uint64_t seed = 20240101;
    int oracle_samples = 0; // seeded (f, α, x) draws re-checked by the midpoint oracle

    /// Every catalog function, α ∈ {0.25,0.5,0.75,1,1.5,2}, s ∈ {0.25,0.5,0.75,1},
    /// (p,q) ∈ {(2,2),(3,1.5),(1.25,5)}, 11 points on [0,1], all theorems but E8printed.
    static SweepConfig defaults();

    std::vector<double> x_grid() const;

    /// Throws ConfigError naming every offending field.
    void validate() const;
};

/// Reads the documented JSON keys on top of `base`; unknown keys are rejected.
SweepConfig config_from_json(const nlohmann::json& j, SweepConfig base = SweepConfig::defaults());
nlohmann::json to_json(const SweepConfig& cfg);

/// Accepts the theorem vocabulary plus "e13" (both Hermite–Hadamard halves).
std::vector<TheoremId> parse_theorem_list(const std::vector<std::string>& names);

struct ResidualRow {
    std::string function;
    double alpha = 0.0;
    double x = 0.0;
    IdentityResidual residual;
    bool passed = true;
};

struct OracleCheck {
    std::string function;
    double alpha = 0.0;
    double x = 0.0;
    double adaptive_left = 0.0;
    double oracle_left = 0.0;
    double adaptive_right = 0.0;
    double oracle_right = 0.0;
    double rel_disagreement = 0.0;
    bool passed = true;
};

struct PointError {
    std::string function;
    double alpha = 0.0;
    double x = 0.0;
    std::string message;
};

struct SweepSummary {
    std::size_t total = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0; // includes informational rows
    double worst_margin = 0.0;   // min margin over asserted reports (NaN when none)
    double worst_residual = 0.0; // max rel_residual over identity checks
    std::size_t identity_failures = 0;
    std::size_t oracle_failures = 0;
    std::size_t convergence_errors = 0;
};

struct SweepResult {
    std::vector<InequalityReport> reports;
    std::vector<ResidualRow> residuals;
    std::vector<OracleCheck> oracle_checks;
    std::vector<PointError> errors;
    SweepSummary summary;
    nlohmann::json provenance;

    /// True when nothing asserted failed and every point converged.
    bool ok() const;
};

inline constexpr double kOracleAgreementTol = 1e-8;

/// Cartesian sweep with certificate gating. Deterministic for a given config;
/// serial and parallel execution give identical results.
SweepResult run_sweep(const SweepConfig& cfg, Execution exec = Execution::Parallel);

/// Sort key used for byte-stable output: (theorem, function, alpha, s, p, x, q).
bool report_order(const InequalityReport& l, const InequalityReport& r);

enum class ReportFormat { Csv, Json };

inline constexpr const char* kCsvHeader =
    "theorem_id,function,alpha,s,p,q,x,lhs,rhs,margin,holds,quad_error_budget,status";

void emit_csv(const SweepResult& res, std::ostream& out);
nlohmann::json to_json(const SweepResult& res);
SweepResult result_from_json(const nlohmann::json& j);
/// Writes to `path`; throws std::runtime_error when the file cannot be written.
void emit_report(const SweepResult& res, ReportFormat format, const std::string& path);

/// Field-wise equality treating NaN as equal to NaN and ignoring the provenance timestamp.
bool equivalent(const SweepResult& l, const SweepResult& r);

/// Shortest round-trip decimal form; empty for NaN.
std::string format_number(double v);

} // namespace fracineq
