#include "fracineq/bounds.hpp"

#include "fracineq/errors.hpp"
#include "fracineq/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fracineq {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct TheoremName {
    TheoremId id;
    std::string_view name;
};

constexpr TheoremName kNames[] = {
    {TheoremId::E6, "E6"},
    {TheoremId::E7, "E7"},
    {TheoremId::E8proof, "E8proof"},
    {TheoremId::E8printed, "E8printed"},
    {TheoremId::E9, "E9"},
    {TheoremId::e1, "e1"},
    {TheoremId::e13_lower, "e13_lower"},
    {TheoremId::e13_upper, "e13_upper"},
    {TheoremId::e14, "e14"},
    {TheoremId::t5_146, "t5_146"},
    {TheoremId::t6_147, "t6_147"},
};

double need(const std::optional<double>& v, const char* what, TheoremId id) {
    if (!v) throw ConfigError(std::string(to_string(id)) + " requires parameter " + what);
    return *v;
}

// ((x−a)^(α+1) + (b−x)^(α+1)) / (b−a)
double endpoint_powers_over_width(const FracParams& prm) {
    return (std::pow(prm.x - prm.a, prm.alpha + 1.0) + std::pow(prm.b - prm.x, prm.alpha + 1.0)) /
           (prm.b - prm.a);
}

// ((x−a)² + (b−x)²) / (b−a)
double squares_over_width(const FracParams& prm) {
    const double da = prm.x - prm.a;
    const double db = prm.b - prm.x;
    return (da * da + db * db) / (prm.b - prm.a);
}

// M (1/(1+α))^(1−1/q) [(1 + Γ(α+1)Γ(s+1)/Γ(α+s+1)) / (α+s+1)]^(1/q) · bracket/(b−a)
double power_mean_bound(double M, double alpha, double s, double q, double bracket) {
    const double gamma_ratio = std::exp(specfun::ln_gamma(alpha + 1.0) + specfun::ln_gamma(s + 1.0) -
                                        specfun::ln_gamma(alpha + s + 1.0));
    const double core = (1.0 + gamma_ratio) / (alpha + s + 1.0);
    const double weight = std::pow(1.0 / (1.0 + alpha), 1.0 - 1.0 / q);
    return M * weight * std::pow(core, 1.0 / q) * bracket;
}

double midpoint_derivative_bracket(const Function1D& f, const FracParams& prm, double exponent) {
    return std::pow(prm.x - prm.a, exponent) * std::abs(f.deriv(0.5 * (prm.x + prm.a))) +
           std::pow(prm.b - prm.x, exponent) * std::abs(f.deriv(0.5 * (prm.b + prm.x)));
}

} // namespace

std::string_view to_string(TheoremId id) {
    for (const auto& n : kNames) {
        if (n.id == id) return n.name;
    }
    return "unknown";
}

std::optional<TheoremId> parse_theorem(std::string_view name) {
    for (const auto& n : kNames) {
        if (n.name == name) return n.id;
    }
    return std::nullopt;
}

const std::vector<TheoremId>& all_theorems() {
    static const std::vector<TheoremId> ids = [] {
        std::vector<TheoremId> v;
        for (const auto& n : kNames) v.push_back(n.id);
        return v;
    }();
    return ids;
}

bool is_fractional(TheoremId id) {
    switch (id) {
    case TheoremId::E6:
    case TheoremId::E7:
    case TheoremId::E8proof:
    case TheoremId::E8printed:
    case TheoremId::E9: return true;
    default: return false;
    }
}

ParamUsage param_usage(TheoremId id) {
    switch (id) {
    case TheoremId::E6: return {true, true, false, false, true};
    case TheoremId::E7:
    case TheoremId::E8printed:
    case TheoremId::E9: return {true, true, true, true, true};
    // p is carried for the power-mean bounds only as the conjugate label of q.
    case TheoremId::E8proof: return {true, true, true, true, true};
    case TheoremId::e1: return {false, false, false, false, true};
    case TheoremId::e13_lower:
    case TheoremId::e13_upper: return {false, true, false, false, false};
    case TheoremId::e14: return {false, true, false, false, true};
    case TheoremId::t5_146:
    case TheoremId::t6_147: return {false, true, true, true, true};
    }
    return {true, true, true, true, true};
}

std::string_view to_string(ReportStatus status) {
    switch (status) {
    case ReportStatus::Asserted: return "asserted";
    case ReportStatus::Skipped: return "skipped";
    case ReportStatus::Informational: return "informational";
    }
    return "unknown";
}

bool margin_holds(double margin, double budget, double margin_tol) {
    return margin >= -std::max(margin_tol, 10.0 * budget);
}

Estimate lhs_frac(const Function1D& f, const FracParams& prm, const QuadratureConfig& cfg) {
    const auto [j_left, j_right] = fracint::lemma_pair(f, prm, cfg);
    const double width = prm.b - prm.a;
    const double g = specfun::gamma(prm.alpha + 1.0);
    const double weight =
        (std::pow(prm.x - prm.a, prm.alpha) + std::pow(prm.b - prm.x, prm.alpha)) / width;
    const double value = weight * f.eval(prm.x) - g / width * (j_left.value + j_right.value);
    return {std::abs(value), g / width * (j_left.error + j_right.error)};
}

double rhs_thm1(const FracParams& prm) {
    const double M = need(prm.M, "M", TheoremId::E6);
    return power_mean_bound(M, prm.alpha, prm.s, 1.0, endpoint_powers_over_width(prm));
}

double rhs_thm2(const FracParams& prm) {
    const double M = need(prm.M, "M", TheoremId::E7);
    const double p = need(prm.p, "p", TheoremId::E7);
    const double q = need(prm.q, "q", TheoremId::E7);
    if (!(q > 1.0)) throw ConfigError("E7 requires q > 1");
    return M / std::pow(1.0 + p * prm.alpha, 1.0 / p) * std::pow(2.0 / (prm.s + 1.0), 1.0 / q) *
           endpoint_powers_over_width(prm);
}

double rhs_thm3(const FracParams& prm) {
    const double M = need(prm.M, "M", TheoremId::E8proof);
    const double q = need(prm.q, "q", TheoremId::E8proof);
    if (!(q >= 1.0)) throw ConfigError("E8proof requires q >= 1");
    return power_mean_bound(M, prm.alpha, prm.s, q, endpoint_powers_over_width(prm));
}

double rhs_e8_printed(const FracParams& prm) {
    need(prm.p, "p (the printed bound uses the Hoelder exponent)", TheoremId::E8printed);
    return rhs_thm2(prm);
}

double rhs_thm4_formula(const Function1D& f, const FracParams& prm) {
    const double p = need(prm.p, "p", TheoremId::E9);
    const double q = need(prm.q, "q", TheoremId::E9);
    if (!(q > 1.0)) throw ConfigError("E9 requires q > 1");
    const double prefactor =
        std::pow(2.0, (prm.s - 1.0) / q) / (std::pow(1.0 + p * prm.alpha, 1.0 / p) * (prm.b - prm.a));
    return prefactor * midpoint_derivative_bracket(f, prm, prm.alpha + 1.0);
}

double rhs_thm4(const Function1D& f, const FracParams& prm, const ConvexityCertificate& cert) {
    const double q = need(prm.q, "q", TheoremId::E9);
    if (cert.mode != ConvexityMode::SConcave || cert.target != CertTarget::AbsDerivPow ||
        cert.s != prm.s || cert.q != q || !cert.passed()) {
        throw HypothesisError("E9: |f'|^q is not certified s-concave for " + f.name);
    }
    return rhs_thm4_formula(f, prm);
}

Estimate lhs_ostrowski(const Function1D& f, const FracParams& prm, const QuadratureConfig& cfg) {
    QuadratureConfig plain = cfg;
    if (plain.rule == QuadRule::GaussJacobi) plain.rule = QuadRule::TransformedAdaptive;
    const Estimate integral = plain.rule == QuadRule::OracleMidpoint
                                  ? quad::midpoint_estimate(f.eval, prm.a, prm.b)
                                  : quad::adaptive(f.eval, prm.a, prm.b, plain);
    const double width = prm.b - prm.a;
    return {std::abs(f.eval(prm.x) - integral.value / width), integral.error / width};
}

double rhs_ostrowski(const FracParams& prm) {
    const double M = need(prm.M, "M", TheoremId::e1);
    const double width = prm.b - prm.a;
    const double offset = prm.x - 0.5 * (prm.a + prm.b);
    return M * width * (0.25 + offset * offset / (width * width));
}

double rhs_classical_convex(const FracParams& prm) {
    const double M = need(prm.M, "M", TheoremId::e14);
    return M * squares_over_width(prm) / (prm.s + 1.0);
}

double rhs_classical_holder(const FracParams& prm) {
    const double M = need(prm.M, "M", TheoremId::E7);
    const double p = need(prm.p, "p", TheoremId::E7);
    const double q = need(prm.q, "q", TheoremId::E7);
    return M / std::pow(1.0 + p, 1.0 / p) * std::pow(2.0 / (prm.s + 1.0), 1.0 / q) *
           squares_over_width(prm);
}

double rhs_classical_power_mean(const FracParams& prm) {
    const double M = need(prm.M, "M", TheoremId::t5_146);
    const double q = need(prm.q, "q", TheoremId::t5_146);
    return M * std::pow(2.0 / (prm.s + 1.0), 1.0 / q) * squares_over_width(prm) / 2.0;
}

double rhs_classical_concave(const Function1D& f, const FracParams& prm) {
    const double p = need(prm.p, "p", TheoremId::t6_147);
    const double q = need(prm.q, "q", TheoremId::t6_147);
    const double prefactor =
        std::pow(2.0, (prm.s - 1.0) / q) / (std::pow(1.0 + p, 1.0 / p) * (prm.b - prm.a));
    return prefactor * midpoint_derivative_bracket(f, prm, 2.0);
}

HermiteHadamardSides hermite_hadamard(const Function1D& f, double a, double b, double s,
                                      const QuadratureConfig& cfg) {
    QuadratureConfig plain = cfg;
    if (plain.rule == QuadRule::GaussJacobi) plain.rule = QuadRule::TransformedAdaptive;
    const Estimate integral = plain.rule == QuadRule::OracleMidpoint
                                  ? quad::midpoint_estimate(f.eval, a, b)
                                  : quad::adaptive(f.eval, a, b, plain);
    const double width = b - a;
    return {std::pow(2.0, s - 1.0) * f.eval(0.5 * (a + b)),
            {integral.value / width, integral.error / width},
            (f.eval(a) + f.eval(b)) / (s + 1.0)};
}

Hypotheses certify_hypotheses(const Function1D& f, double s, std::optional<double> q,
                              const CertifyOptions& opts) {
    Hypotheses h;
    h.abs_deriv_sconvex =
        certify(f, s, 1.0, ConvexityMode::SConvex, CertTarget::AbsDeriv, opts).passed();
    if (q) {
        h.pow_sconvex = certify(f, s, *q, ConvexityMode::SConvex, CertTarget::AbsDerivPow, opts).passed();
        h.pow_sconcave =
            certify(f, s, *q, ConvexityMode::SConcave, CertTarget::AbsDerivPow, opts).passed();
    }
    bool nonnegative = true;
    const int n = opts.grid_size;
    for (int i = 0; i < n && nonnegative; ++i) {
        const double t = f.domain_lo + (f.domain_hi - f.domain_lo) * i / (n - 1);
        nonnegative = f.eval(t) >= 0.0;
    }
    h.value_sconvex =
        nonnegative && certify(f, s, 1.0, ConvexityMode::SConvex, CertTarget::Value, opts).passed();
    return h;
}

InequalityReport evaluate(TheoremId id, const Function1D& f, const FracParams& prm,
                          const Hypotheses& hyp, const QuadratureConfig& cfg,
                          const Estimate* lhs_cache, double margin_tol) {
    prm.validate();
    InequalityReport r;
    r.theorem = id;
    r.function = f.name;

    Estimate lhs;
    bool certified = true;
    std::string missing;
    auto require = [&](bool ok, const char* what) {
        if (!ok && certified) {
            certified = false;
            missing = what;
        }
    };

    switch (id) {
    case TheoremId::E6:
    case TheoremId::E7:
    case TheoremId::E8proof:
    case TheoremId::E8printed:
    case TheoremId::E9:
        lhs = lhs_cache ? *lhs_cache : lhs_frac(f, prm, cfg);
        break;
    case TheoremId::e1:
    case TheoremId::e14:
    case TheoremId::t5_146:
    case TheoremId::t6_147:
        lhs = lhs_cache ? *lhs_cache : lhs_ostrowski(f, prm, cfg);
        break;
    case TheoremId::e13_lower:
    case TheoremId::e13_upper:
        break;
    }

    switch (id) {
    case TheoremId::E6:
        r.rhs = rhs_thm1(prm);
        require(hyp.abs_deriv_sconvex, "|f'| not certified s-convex");
        break;
    case TheoremId::E7:
        r.rhs = rhs_thm2(prm);
        require(hyp.pow_sconvex, "|f'|^q not certified s-convex");
        break;
    case TheoremId::E8proof:
        r.rhs = rhs_thm3(prm);
        require(hyp.pow_sconvex, "|f'|^q not certified s-convex");
        break;
    case TheoremId::E8printed:
        r.rhs = rhs_e8_printed(prm);
        break;
    case TheoremId::E9:
        r.rhs = rhs_thm4_formula(f, prm);
        require(hyp.pow_sconcave, "|f'|^q not certified s-concave");
        break;
    case TheoremId::e1:
        r.rhs = rhs_ostrowski(prm);
        break;
    case TheoremId::e14:
        r.rhs = rhs_classical_convex(prm);
        require(hyp.abs_deriv_sconvex, "|f'| not certified s-convex");
        break;
    case TheoremId::t5_146:
        r.rhs = rhs_classical_power_mean(prm);
        require(hyp.pow_sconvex, "|f'|^q not certified s-convex");
        break;
    case TheoremId::t6_147:
        r.rhs = rhs_classical_concave(f, prm);
        require(hyp.pow_sconcave, "|f'|^q not certified s-concave");
        break;
    case TheoremId::e13_lower:
    case TheoremId::e13_upper: {
        const auto hh = hermite_hadamard(f, prm.a, prm.b, prm.s, cfg);
        if (id == TheoremId::e13_lower) {
            lhs = {hh.lower, 0.0};
            r.rhs = hh.mean.value;
        } else {
            lhs = hh.mean;
            r.rhs = hh.upper;
        }
        lhs.error = hh.mean.error;
        require(hyp.value_sconvex, "f not certified s-convex and nonnegative");
        break;
    }
    }

    r.lhs = lhs.value;
    r.quad_error_budget = lhs.error;
    r.margin = r.rhs - r.lhs;
    r.holds = margin_holds(r.margin, r.quad_error_budget, margin_tol);
    if (id == TheoremId::E8printed) {
        r.status = ReportStatus::Informational;
        r.note = "printed statement of the power-mean theorem; diagnostic only";
    } else if (!certified) {
        r.status = ReportStatus::Skipped;
        r.note = missing;
    }

    r.prm = prm;
    const ParamUsage use = param_usage(id);
    if (!use.alpha) r.prm.alpha = kNaN;
    if (!use.s) r.prm.s = kNaN;
    if (!use.p) r.prm.p.reset();
    if (!use.q) r.prm.q.reset();
    if (!use.x) r.prm.x = kNaN;
    return r;
}

std::vector<InequalityReport> classical_suite(const Function1D& f, const FracParams& prm,
                                              const Hypotheses& hyp, const QuadratureConfig& cfg) {
    std::vector<InequalityReport> out;
    const Estimate ostrowski_lhs = lhs_ostrowski(f, prm, cfg);
    out.push_back(evaluate(TheoremId::e1, f, prm, hyp, cfg, &ostrowski_lhs));
    out.push_back(evaluate(TheoremId::e13_lower, f, prm, hyp, cfg));
    out.push_back(evaluate(TheoremId::e13_upper, f, prm, hyp, cfg));
    out.push_back(evaluate(TheoremId::e14, f, prm, hyp, cfg, &ostrowski_lhs));
    if (prm.q) {
        out.push_back(evaluate(TheoremId::t5_146, f, prm, hyp, cfg, &ostrowski_lhs));
        if (prm.p && *prm.q > 1.0) {
            out.push_back(evaluate(TheoremId::t6_147, f, prm, hyp, cfg, &ostrowski_lhs));
        }
    }
    return out;
}

double reduction_check(TheoremId id, const ReductionGrid& grid) {
    if (id != TheoremId::E6 && id != TheoremId::E7 && id != TheoremId::E8proof &&
        id != TheoremId::E9) {
        throw ConfigError("reduction_check: no classical counterpart for " +
                          std::string(to_string(id)));
    }
    double worst = 0.0;
    for (const auto& [a, b] : grid.intervals) {
        for (int i = 0; i < grid.x_points; ++i) {
            FracParams prm;
            prm.a = a;
            prm.b = b;
            prm.x = (i == grid.x_points - 1) ? b : a + (b - a) * i / (grid.x_points - 1);
            prm.alpha = 1.0;
            for (double s : grid.s_values) {
                prm.s = s;
                for (double M : grid.M_values) {
                    prm.M = M;
                    switch (id) {
                    case TheoremId::E6:
                        prm.p.reset();
                        prm.q.reset();
                        worst = std::max(worst, std::abs(rhs_thm1(prm) - rhs_classical_convex(prm)));
                        break;
                    case TheoremId::E7:
                        for (const auto& [p, q] : grid.pq_pairs) {
                            prm.p = p;
                            prm.q = q;
                            worst = std::max(worst, std::abs(rhs_thm2(prm) - rhs_classical_holder(prm)));
                        }
                        break;
                    case TheoremId::E8proof: {
                        std::vector<double> qs = grid.q_values;
                        for (const auto& pq : grid.pq_pairs) qs.push_back(pq.second);
                        prm.p.reset();
                        for (double q : qs) {
                            prm.q = q;
                            worst = std::max(worst,
                                             std::abs(rhs_thm3(prm) - rhs_classical_power_mean(prm)));
                        }
                        break;
                    }
                    case TheoremId::E9:
                        for (const auto& entry : builtin_catalog()) {
                            const Function1D& f = entry.function;
                            if (!grid.functions.empty() &&
                                std::find(grid.functions.begin(), grid.functions.end(), f.name) ==
                                    grid.functions.end()) {
                                continue;
                            }
                            if (a < f.domain_lo || b > f.domain_hi) continue;
                            for (const auto& [p, q] : grid.pq_pairs) {
                                prm.p = p;
                                prm.q = q;
                                worst = std::max(worst, std::abs(rhs_thm4_formula(f, prm) -
                                                                 rhs_classical_concave(f, prm)));
                            }
                        }
                        break;
                    default: break;
                    }
                }
            }
        }
    }
    return worst;
}

} // namespace fracineq
