#include "fracineq/harness.hpp"

#include "fracineq/errors.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <limits>
#include <random>
#include <set>
#include <sstream>

namespace fracineq {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// The Ostrowski bound needs only |f'| <= M; everything else is gated on a certificate.
bool needs_certificates(const std::vector<TheoremId>& ids) {
    return std::any_of(ids.begin(), ids.end(), [](TheoremId id) { return id != TheoremId::e1; });
}

// NaN sorts first so blanked parameters group ahead of real values.
int compare_num(double l, double r) {
    const bool ln = std::isnan(l), rn = std::isnan(r);
    if (ln || rn) return ln == rn ? 0 : (ln ? -1 : 1);
    return l < r ? -1 : (l > r ? 1 : 0);
}

double opt_or_nan(const std::optional<double>& v) { return v ? *v : kNaN; }

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::string timestamp() {
    std::time_t now = std::time(nullptr);
    if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
        now = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
    }
    char buf[32];
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace

SweepConfig SweepConfig::defaults() {
    SweepConfig cfg;
    for (const auto& e : builtin_catalog()) cfg.functions.push_back(e.function.name);
    cfg.alphas = {0.25, 0.5, 0.75, 1.0, 1.5, 2.0};
    cfg.s_values = {0.25, 0.5, 0.75, 1.0};
    cfg.pq_pairs = {{2.0, 2.0}, {3.0, 1.5}, {1.25, 5.0}};
    for (TheoremId id : all_theorems()) {
        if (id != TheoremId::E8printed) cfg.theorems.push_back(id);
    }
    return cfg;
}

std::vector<double> SweepConfig::x_grid() const {
    if (!x_values.empty()) return x_values;
    std::vector<double> xs;
    if (x_points == 1) return {0.5 * (a + b)};
    for (int i = 0; i < x_points; ++i) {
        xs.push_back(i == x_points - 1 ? b : a + (b - a) * i / (x_points - 1));
    }
    return xs;
}

void SweepConfig::validate() const {
    std::vector<std::string> bad;
    if (functions.empty()) bad.push_back("functions: empty");
    for (const auto& name : functions) {
        try {
            const auto& f = catalog_entry(name).function;
            if (a < f.domain_lo || b > f.domain_hi) {
                bad.push_back("functions: " + name + " is not defined on [a,b]");
            }
        } catch (const ConfigError& e) {
            bad.push_back(std::string("functions: ") + e.what());
        }
    }
    if (alphas.empty()) bad.push_back("alphas: empty");
    for (double al : alphas) {
        if (!(al > 0.0) || !std::isfinite(al)) bad.push_back("alphas: " + format_number(al) + " not > 0");
    }
    if (s_values.empty()) bad.push_back("s_values: empty");
    for (double s : s_values) {
        if (!(s > 0.0 && s <= 1.0)) bad.push_back("s_values: " + format_number(s) + " not in (0,1]");
    }
    for (const auto& [p, q] : pq_pairs) {
        if (!(p > 1.0) || !(q > 1.0) || std::abs(1.0 / p + 1.0 / q - 1.0) > 1e-12) {
            bad.push_back("pq_pairs: (" + format_number(p) + "," + format_number(q) +
                          ") not a conjugate pair");
        }
    }
    if (!(a < b)) bad.push_back("interval: need a < b");
    if (a < 0.0 && needs_certificates(theorems)) {
        bad.push_back("interval: s-convexity hypotheses need a >= 0 (only e1 runs on a < 0)");
    }
    if (x_values.empty() && x_points < 1) bad.push_back("x_points: must be >= 1");
    for (double x : x_values) {
        if (!(x >= a && x <= b)) bad.push_back("x_values: " + format_number(x) + " outside [a,b]");
    }
    if (!(identity_tol > 0.0)) bad.push_back("identity_tol: must be > 0");
    if (!(margin_tol > 0.0)) bad.push_back("margin_tol: must be > 0");
    if (!(cert_tol > 0.0)) bad.push_back("cert_tol: must be > 0");
    if (cert_grid < 33) bad.push_back("cert_grid: must be >= 33");
    if (!(quad.rel_tol > 0.0) || !(quad.abs_tol > 0.0)) bad.push_back("quadrature: tolerances must be > 0");
    if (quad.max_subdivisions < 8) bad.push_back("quadrature: max_subdivisions must be >= 8");
    if (theorems.empty()) bad.push_back("theorems: empty");
    if (oracle_samples < 0) bad.push_back("oracle_samples: must be >= 0");
    if (!bad.empty()) {
        std::string msg = "invalid sweep config:";
        for (const auto& b2 : bad) msg += "\n  " + b2;
        throw ConfigError(msg);
    }
}

std::vector<TheoremId> parse_theorem_list(const std::vector<std::string>& names) {
    std::vector<TheoremId> out;
    for (const auto& n : names) {
        if (n == "e13") {
            out.push_back(TheoremId::e13_lower);
            out.push_back(TheoremId::e13_upper);
        } else if (auto id = parse_theorem(n)) {
            out.push_back(*id);
        } else {
            throw ConfigError("theorems: unknown theorem id '" + n + "'");
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool report_order(const InequalityReport& l, const InequalityReport& r) {
    if (l.theorem != r.theorem) return l.theorem < r.theorem;
    if (l.function != r.function) return l.function < r.function;
    for (auto [lv, rv] : {std::pair{l.prm.alpha, r.prm.alpha}, std::pair{l.prm.s, r.prm.s},
                          std::pair{opt_or_nan(l.prm.p), opt_or_nan(r.prm.p)},
                          std::pair{l.prm.x, r.prm.x},
                          std::pair{opt_or_nan(l.prm.q), opt_or_nan(r.prm.q)}}) {
        if (int c = compare_num(lv, rv)) return c < 0;
    }
    return false;
}

bool SweepResult::ok() const {
    return summary.failed == 0 && summary.identity_failures == 0 && summary.oracle_failures == 0 &&
           summary.convergence_errors == 0;
}

namespace {

struct PreparedFunction {
    Function1D f;
    double M;
};

// Hypotheses indexed [function][s][q]; slot q == n_pq is the q-free certificate set.
struct HypothesisTable {
    std::size_t n_s = 0;
    std::size_t n_q = 0;
    std::vector<Hypotheses> cells;

    const Hypotheses& at(std::size_t fi, std::size_t si, std::size_t qi) const {
        return cells[(fi * n_s + si) * (n_q + 1) + qi];
    }
};

struct UnitOutput {
    std::vector<InequalityReport> reports;
    std::vector<ResidualRow> residuals;
    std::vector<PointError> errors;
};

bool selected(const std::vector<TheoremId>& ids, TheoremId id) {
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

} // namespace

SweepResult run_sweep(const SweepConfig& cfg, Execution exec) {
    cfg.validate();
    const std::vector<double> xs = cfg.x_grid();
    const std::size_t n_f = cfg.functions.size();
    const std::size_t n_alpha = cfg.alphas.size();
    const std::size_t n_x = xs.size();
    const std::size_t n_s = cfg.s_values.size();
    const std::size_t n_pq = cfg.pq_pairs.size();
    const int threads = worker_threads();

    std::vector<PreparedFunction> funcs;
    for (const auto& name : cfg.functions) {
        Function1D f = catalog_entry(name).function.restricted(cfg.a, cfg.b);
        const double M = derivative_bound(f).M;
        funcs.push_back({std::move(f), M});
    }

    HypothesisTable hyp;
    hyp.n_s = n_s;
    hyp.n_q = n_pq;
    hyp.cells.resize(n_f * n_s * (n_pq + 1));
    if (needs_certificates(cfg.theorems)) {
        CertifyOptions opts;
        opts.grid_size = cfg.cert_grid;
        opts.cert_tol = cfg.cert_tol;
        opts.exec = Execution::Serial;
        const long cells = static_cast<long>(hyp.cells.size());
        auto fill = [&](long c) {
            const std::size_t qi = static_cast<std::size_t>(c) % (n_pq + 1);
            const std::size_t si = (static_cast<std::size_t>(c) / (n_pq + 1)) % n_s;
            const std::size_t fi = static_cast<std::size_t>(c) / ((n_pq + 1) * n_s);
            const std::optional<double> q =
                qi < n_pq ? std::optional<double>(cfg.pq_pairs[qi].second) : std::nullopt;
            hyp.cells[static_cast<std::size_t>(c)] =
                certify_hypotheses(funcs[fi].f, cfg.s_values[si], q, opts);
        };
        if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic) num_threads(threads)
            for (long c = 0; c < cells; ++c) fill(c);
        } else {
            for (long c = 0; c < cells; ++c) fill(c);
        }
    }

    // Work unit (f, x, k): k < n_alpha is the fractional block at alphas[k]; k == n_alpha
    // the classical block (Hermite–Hadamard only at the first x).
    const std::size_t per_x = n_alpha + 1;
    const long n_units = static_cast<long>(n_f * n_x * per_x);
    std::vector<UnitOutput> outputs(static_cast<std::size_t>(n_units));

    auto run_unit = [&](long u) {
        const std::size_t k = static_cast<std::size_t>(u) % per_x;
        const std::size_t xi = (static_cast<std::size_t>(u) / per_x) % n_x;
        const std::size_t fi = static_cast<std::size_t>(u) / (per_x * n_x);
        const PreparedFunction& pf = funcs[fi];
        UnitOutput& out = outputs[static_cast<std::size_t>(u)];

        FracParams base;
        base.a = cfg.a;
        base.b = cfg.b;
        base.x = xs[xi];
        base.M = pf.M;
        const bool classical = k == n_alpha;
        base.alpha = classical ? 1.0 : cfg.alphas[k];

        auto emit = [&](TheoremId id, FracParams prm, const Hypotheses& h, const Estimate* lhs) {
            out.reports.push_back(evaluate(id, pf.f, prm, h, cfg.quad, lhs, cfg.margin_tol));
        };

        try {
            if (!classical) {
                ResidualRow row;
                row.function = pf.f.name;
                row.alpha = base.alpha;
                row.x = base.x;
                row.residual = check_e1(pf.f, base, cfg.quad);
                row.passed = row.residual.passed(cfg.identity_tol);
                out.residuals.push_back(row);

                const Estimate lhs = lhs_frac(pf.f, base, cfg.quad);
                for (TheoremId id : cfg.theorems) {
                    if (!is_fractional(id)) continue;
                    for (std::size_t si = 0; si < n_s; ++si) {
                        FracParams prm = base;
                        prm.s = cfg.s_values[si];
                        if (id == TheoremId::E6) {
                            emit(id, prm, hyp.at(fi, si, n_pq), &lhs);
                            continue;
                        }
                        for (std::size_t qi = 0; qi < n_pq; ++qi) {
                            prm.p = cfg.pq_pairs[qi].first;
                            prm.q = cfg.pq_pairs[qi].second;
                            emit(id, prm, hyp.at(fi, si, qi), &lhs);
                        }
                    }
                }
                return;
            }

            const Estimate lhs = lhs_ostrowski(pf.f, base, cfg.quad);
            if (selected(cfg.theorems, TheoremId::e1)) emit(TheoremId::e1, base, {}, &lhs);
            for (std::size_t si = 0; si < n_s; ++si) {
                FracParams prm = base;
                prm.s = cfg.s_values[si];
                const Hypotheses& h0 = hyp.at(fi, si, n_pq);
                if (xi == 0) {
                    for (TheoremId id : {TheoremId::e13_lower, TheoremId::e13_upper}) {
                        if (selected(cfg.theorems, id)) emit(id, prm, h0, nullptr);
                    }
                }
                if (selected(cfg.theorems, TheoremId::e14)) emit(TheoremId::e14, prm, h0, &lhs);
                for (std::size_t qi = 0; qi < n_pq; ++qi) {
                    prm.p = cfg.pq_pairs[qi].first;
                    prm.q = cfg.pq_pairs[qi].second;
                    for (TheoremId id : {TheoremId::t5_146, TheoremId::t6_147}) {
                        if (selected(cfg.theorems, id)) emit(id, prm, hyp.at(fi, si, qi), &lhs);
                    }
                }
            }
        } catch (const ConvergenceError& e) {
            out.errors.push_back({pf.f.name, classical ? kNaN : base.alpha, base.x, e.what()});
        }
    };

    if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic) num_threads(threads)
        for (long u = 0; u < n_units; ++u) run_unit(u);
    } else {
        for (long u = 0; u < n_units; ++u) run_unit(u);
    }

    SweepResult res;
    for (auto& o : outputs) {
        std::move(o.reports.begin(), o.reports.end(), std::back_inserter(res.reports));
        std::move(o.residuals.begin(), o.residuals.end(), std::back_inserter(res.residuals));
        std::move(o.errors.begin(), o.errors.end(), std::back_inserter(res.errors));
    }
    std::stable_sort(res.reports.begin(), res.reports.end(), report_order);
    std::stable_sort(res.residuals.begin(), res.residuals.end(),
                     [](const ResidualRow& l, const ResidualRow& r) {
                         if (l.function != r.function) return l.function < r.function;
                         if (l.alpha != r.alpha) return l.alpha < r.alpha;
                         return l.x < r.x;
                     });

    // Oracle cross-checks at seeded interior points.
    if (cfg.oracle_samples > 0) {
        std::vector<double> interior;
        for (double x : xs) {
            if (x > cfg.a && x < cfg.b) interior.push_back(x);
        }
        if (interior.empty()) interior.push_back(0.5 * (cfg.a + cfg.b));
        std::mt19937_64 rng(cfg.seed);
        struct Draw {
            std::size_t fi;
            double alpha;
            double x;
        };
        std::vector<Draw> draws;
        for (int i = 0; i < cfg.oracle_samples; ++i) {
            const auto fi = static_cast<std::size_t>(uniform01(rng) * n_f);
            const auto ai = static_cast<std::size_t>(uniform01(rng) * n_alpha);
            const auto xi = static_cast<std::size_t>(uniform01(rng) * interior.size());
            draws.push_back({std::min(fi, n_f - 1), cfg.alphas[std::min(ai, n_alpha - 1)],
                             interior[std::min(xi, interior.size() - 1)]});
        }
        res.oracle_checks.resize(draws.size());
        auto check = [&](long i) {
            const Draw& d = draws[static_cast<std::size_t>(i)];
            const Function1D& f = funcs[d.fi].f;
            OracleCheck& oc = res.oracle_checks[static_cast<std::size_t>(i)];
            oc.function = f.name;
            oc.alpha = d.alpha;
            oc.x = d.x;
            try {
                FracParams prm;
                prm.a = cfg.a;
                prm.b = cfg.b;
                prm.x = d.x;
                prm.alpha = d.alpha;
                const auto [left, right] = fracint::lemma_pair(f, prm, cfg.quad);
                oc.adaptive_left = left.value;
                oc.adaptive_right = right.value;
                oc.oracle_left = fracint::oracle(f, cfg.a, d.x, d.alpha).value;
                oc.oracle_right = fracint::oracle(f, cfg.b, d.x, d.alpha).value;
                auto rel = [](double u, double v) {
                    return std::abs(u - v) / std::max({1e-300, std::abs(u), std::abs(v)});
                };
                auto close = [](double u, double v) {
                    return std::abs(u - v) <= kOracleAgreementTol * std::max(std::abs(u), std::abs(v)) ||
                           std::abs(u - v) <= 1e-14;
                };
                oc.rel_disagreement = std::max(rel(oc.adaptive_left, oc.oracle_left),
                                               rel(oc.adaptive_right, oc.oracle_right));
                oc.passed = close(oc.adaptive_left, oc.oracle_left) &&
                            close(oc.adaptive_right, oc.oracle_right);
            } catch (const ConvergenceError&) {
                oc.passed = false;
            }
        };
        const long n_draws = static_cast<long>(draws.size());
        if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic) num_threads(threads)
            for (long i = 0; i < n_draws; ++i) check(i);
        } else {
            for (long i = 0; i < n_draws; ++i) check(i);
        }
    }

    SweepSummary& sum = res.summary;
    sum.worst_margin = kNaN;
    for (const auto& r : res.reports) {
        ++sum.total;
        if (r.status != ReportStatus::Asserted) {
            ++sum.skipped;
            continue;
        }
        if (r.holds) ++sum.passed; else ++sum.failed;
        if (std::isnan(sum.worst_margin) || r.margin < sum.worst_margin) sum.worst_margin = r.margin;
    }
    for (const auto& r : res.residuals) {
        sum.worst_residual = std::max(sum.worst_residual, r.residual.rel_residual);
        if (!r.passed) ++sum.identity_failures;
    }
    for (const auto& oc : res.oracle_checks) {
        if (!oc.passed) ++sum.oracle_failures;
    }
    sum.convergence_errors = res.errors.size();

    res.provenance = {{"config", to_json(cfg)},
                      {"version", FRACINEQ_VERSION},
                      {"timestamp", timestamp()}};
    return res;
}

} // namespace fracineq
