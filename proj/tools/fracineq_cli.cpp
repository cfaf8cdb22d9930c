// Command-line front end: catalog, check-identity, verify, reduce, sweep.

#include "fracineq/bounds.hpp"
#include "fracineq/errors.hpp"
#include "fracineq/harness.hpp"
#include "fracineq/identity.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace fracineq;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::string fmt(double v) { return format_number(v); }

QuadRule rule_or_throw(const std::string& name) {
    auto r = parse_quad_rule(name);
    if (!r) throw ConfigError("unknown quadrature rule '" + name + "'");
    return *r;
}

int cmd_catalog(double a, double b) {
    for (const auto& e : builtin_catalog()) {
        const Function1D& full = e.function;
        std::cout << full.name << "  (" << e.description << ")  domain [" << fmt(full.domain_lo)
                  << ", " << fmt(full.domain_hi) << "]";
        if (e.analytic_M) std::cout << "  M=" << fmt(*e.analytic_M) << " (analytic, full domain)";
        std::cout << '\n';
        const double lo = std::max({a, full.domain_lo, 0.0});
        const double hi = std::min(b, full.domain_hi);
        if (!(lo < hi)) {
            std::cout << "  not defined on the requested interval\n";
            continue;
        }
        const Function1D f = full.restricted(lo, hi);
        const DerivBound M = derivative_bound(f);
        std::cout << "  on [" << fmt(lo) << ", " << fmt(hi) << "]: M=" << fmt(M.M)
                  << (M.method == DerivBound::Method::Analytic ? " (analytic)" : " (sampled)") << '\n';
        for (double s : e.s_convex) {
            const auto c = certify(f, s, 1.0, ConvexityMode::SConvex, CertTarget::AbsDeriv);
            std::cout << "  |f'| s-convex  s=" << fmt(s) << "  max_violation=" << fmt(c.max_violation)
                      << (c.passed() ? "  PASS" : "  FAIL") << '\n';
        }
        for (double s : e.s_concave) {
            for (double q : e.concave_q) {
                const auto c = certify(f, s, q, ConvexityMode::SConcave, CertTarget::AbsDerivPow);
                std::cout << "  |f'|^q s-concave  s=" << fmt(s) << " q=" << fmt(q)
                          << "  max_violation=" << fmt(c.max_violation)
                          << (c.passed() ? "  PASS" : "  FAIL") << '\n';
            }
        }
    }
    return kExitOk;
}

void print_residual(const std::string& label, const IdentityResidual& r, double tol) {
    std::cout << "  " << label << ": lhs=" << fmt(r.lhs) << " rhs=" << fmt(r.rhs)
              << " rel_residual=" << fmt(r.rel_residual) << " budget=" << fmt(r.quad_error_budget)
              << (r.passed(tol) ? "  PASS" : "  FAIL") << '\n';
}

int cmd_check_identity(const std::string& function, double a, double b, std::vector<double> xs,
                       std::vector<double> alphas, const QuadratureConfig& qc, double tol) {
    const Function1D f = catalog_entry(function).function;
    if (xs.empty()) {
        for (int i = 1; i <= 9; ++i) xs.push_back(a + (b - a) * i / 10.0);
    }
    if (alphas.empty()) alphas = {0.25, 0.5, 0.75, 1.0, 1.5, 2.0};
    bool ok = true;
    for (double alpha : alphas) {
        for (double x : xs) {
            FracParams prm;
            prm.a = a;
            prm.b = b;
            prm.x = x;
            prm.alpha = alpha;
            std::cout << function << " alpha=" << fmt(alpha) << " x=" << fmt(x) << '\n';
            const auto e1 = check_e1(f, prm, qc);
            print_residual("E1", e1, tol);
            ok = ok && e1.passed(tol);
            if (x > a && x < b) {
                const auto [e4, e5] = check_e4_e5(f, prm, qc);
                print_residual("E4", e4, tol);
                print_residual("E5", e5, tol);
                ok = ok && e4.passed(tol) && e5.passed(tol);
            }
            if (alpha == 1.0) {
                const auto cl = check_classical_lemma(f, a, b, x, qc);
                print_residual("classical", cl, tol);
                const bool coincide = cl.e1_deviation <= 1e-12;
                std::cout << "  classical vs E1 deviation=" << fmt(cl.e1_deviation)
                          << (coincide ? "  PASS" : "  FAIL") << '\n';
                ok = ok && cl.passed(tol) && coincide;
            }
        }
    }
    return ok ? kExitOk : kExitFailure;
}

void print_report(const InequalityReport& r) {
    std::cout << to_string(r.theorem) << " " << r.function;
    if (!std::isnan(r.prm.alpha)) std::cout << " alpha=" << fmt(r.prm.alpha);
    if (!std::isnan(r.prm.s)) std::cout << " s=" << fmt(r.prm.s);
    if (r.prm.p) std::cout << " p=" << fmt(*r.prm.p);
    if (r.prm.q) std::cout << " q=" << fmt(*r.prm.q);
    if (!std::isnan(r.prm.x)) std::cout << " x=" << fmt(r.prm.x);
    if (r.prm.M) std::cout << " M=" << fmt(*r.prm.M);
    std::cout << "\n  lhs=" << fmt(r.lhs) << " rhs=" << fmt(r.rhs) << " margin=" << fmt(r.margin)
              << " budget=" << fmt(r.quad_error_budget) << '\n';
    switch (r.status) {
    case ReportStatus::Asserted: std::cout << (r.holds ? "  HOLDS\n" : "  VIOLATED\n"); break;
    case ReportStatus::Skipped:
        std::cout << "  SKIPPED (hypothesis not established: " << r.note << ")\n";
        break;
    case ReportStatus::Informational: std::cout << "  INFORMATIONAL (" << r.note << ")\n"; break;
    }
}

int cmd_verify(const std::string& theorem, const std::string& function, FracParams prm,
               const QuadratureConfig& qc) {
    const auto ids = parse_theorem_list({theorem});
    const Function1D f = catalog_entry(function).function.restricted(prm.a, prm.b);
    if (!prm.M) prm.M = derivative_bound(f).M;
    const bool needs_pq = std::any_of(ids.begin(), ids.end(), [](TheoremId id) {
        const auto u = param_usage(id);
        return u.p || u.q;
    });
    if (needs_pq && !prm.p && !prm.q) {
        prm.p = 2.0;
        prm.q = 2.0;
    } else if (prm.p && !prm.q) {
        prm.q = conjugate_exponent(*prm.p);
    } else if (prm.q && !prm.p && *prm.q > 1.0) {
        prm.p = conjugate_exponent(*prm.q);
    }
    prm.validate();
    const Hypotheses hyp = certify_hypotheses(f, prm.s, prm.q);
    bool ok = true;
    for (TheoremId id : ids) {
        const auto r = evaluate(id, f, prm, hyp, qc);
        print_report(r);
        if (r.status == ReportStatus::Asserted && !r.holds) ok = false;
    }
    return ok ? kExitOk : kExitFailure;
}

int cmd_reduce(const std::string& theorem) {
    std::vector<TheoremId> ids;
    if (theorem == "all") {
        ids = {TheoremId::E6, TheoremId::E7, TheoremId::E8proof, TheoremId::E9};
    } else {
        auto id = parse_theorem(theorem);
        if (!id) throw ConfigError("unknown theorem id '" + theorem + "'");
        ids = {*id};
    }
    bool ok = true;
    for (TheoremId id : ids) {
        const double dev = reduction_check(id);
        const bool pass = dev <= 1e-12;
        ok = ok && pass;
        std::cout << to_string(id) << " at alpha=1: max deviation from classical bound = " << fmt(dev)
                  << (pass ? "  PASS" : "  FAIL") << '\n';
    }
    return ok ? kExitOk : kExitFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical verification of fractional Ostrowski-type inequalities"};
    app.require_subcommand(1);

    QuadratureConfig qc;
    std::string rule_name = std::string(to_string(qc.rule));
    auto add_quad_flags = [&](CLI::App* sub) {
        sub->add_option("--rule", rule_name, "transformed-adaptive | gauss-jacobi | oracle-midpoint");
        sub->add_option("--rel-tol", qc.rel_tol, "quadrature relative tolerance");
        sub->add_option("--abs-tol", qc.abs_tol, "quadrature absolute tolerance");
        sub->add_option("--max-subdivisions", qc.max_subdivisions);
    };

    double cat_a = 0.0, cat_b = 1.0;
    auto* catalog = app.add_subcommand("catalog", "List catalog functions and their certificates");
    catalog->add_option("--a", cat_a, "left end of the certification interval");
    catalog->add_option("--b", cat_b, "right end of the certification interval");

    std::string id_function;
    double id_a = 0.0, id_b = 1.0, id_tol = kIdentityTol;
    std::vector<double> id_x, id_alpha;
    auto* check = app.add_subcommand("check-identity", "Verify the fractional identity and its halves");
    check->add_option("--function", id_function, "catalog function name")->required();
    check->add_option("--a", id_a);
    check->add_option("--b", id_b);
    check->add_option("--x", id_x, "evaluation point(s); default 9 interior points");
    check->add_option("--alpha", id_alpha, "fractional order(s)");
    check->add_option("--tol", id_tol, "identity tolerance");
    add_quad_flags(check);

    std::string v_theorem, v_function;
    FracParams v_prm;
    std::optional<double> v_p, v_q, v_M;
    auto* verify = app.add_subcommand("verify", "Evaluate one theorem at one parameter point");
    verify->add_option("--theorem", v_theorem, "E6 E7 E8proof E8printed E9 e1 e13 e14 t5_146 t6_147")
        ->required();
    verify->add_option("--function", v_function)->required();
    verify->add_option("--alpha", v_prm.alpha);
    verify->add_option("--s", v_prm.s);
    verify->add_option("--x", v_prm.x);
    verify->add_option("--a", v_prm.a);
    verify->add_option("--b", v_prm.b);
    verify->add_option("--p", v_p);
    verify->add_option("--q", v_q);
    verify->add_option("--M", v_M, "derivative bound; default from the catalog");
    add_quad_flags(verify);

    std::string r_theorem = "all";
    auto* reduce = app.add_subcommand("reduce", "Check the alpha=1 reductions to the classical bounds");
    reduce->add_option("--theorem", r_theorem, "E6 | E7 | E8proof | E9 | all");

    std::string sw_config, sw_out, sw_format = "csv";
    bool sw_serial = false;
    std::optional<int> sw_threads, sw_x_points, sw_oracle;
    std::optional<std::uint64_t> sw_seed;
    std::vector<std::string> sw_functions, sw_theorems;
    std::vector<double> sw_alphas, sw_s;
    auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep and write a report");
    sweep->add_option("--config", sw_config, "JSON sweep config (flags override it)");
    sweep->add_option("--out", sw_out, "output path (default: stdout)");
    sweep->add_option("--format", sw_format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    sweep->add_flag("--serial", sw_serial, "use the serial reference path");
    sweep->add_option("--threads", sw_threads, "cap worker threads");
    sweep->add_option("--seed", sw_seed);
    sweep->add_option("--functions", sw_functions);
    sweep->add_option("--theorems", sw_theorems);
    sweep->add_option("--alphas", sw_alphas);
    sweep->add_option("--s", sw_s);
    sweep->add_option("--x-points", sw_x_points);
    sweep->add_option("--oracle-samples", sw_oracle);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        qc.rule = rule_or_throw(rule_name);
        qc.validate();
        if (*catalog) return cmd_catalog(cat_a, cat_b);
        if (*check) return cmd_check_identity(id_function, id_a, id_b, id_x, id_alpha, qc, id_tol);
        if (*verify) {
            v_prm.p = v_p;
            v_prm.q = v_q;
            v_prm.M = v_M;
            return cmd_verify(v_theorem, v_function, v_prm, qc);
        }
        if (*reduce) return cmd_reduce(r_theorem);
        if (*sweep) {
            SweepConfig cfg = SweepConfig::defaults();
            if (!sw_config.empty()) {
                std::ifstream in(sw_config);
                if (!in) {
                    std::cerr << "error: cannot read config '" << sw_config << "'\n";
                    return kExitIo;
                }
                nlohmann::json j;
                try {
                    in >> j;
                } catch (const nlohmann::json::exception& e) {
                    throw ConfigError(std::string("config parse error: ") + e.what());
                }
                cfg = config_from_json(j, cfg);
            }
            if (sw_threads) setenv("FRACINEQ_THREADS", std::to_string(*sw_threads).c_str(), 1);
            if (sw_seed) cfg.seed = *sw_seed;
            if (!sw_functions.empty()) cfg.functions = sw_functions;
            if (!sw_theorems.empty()) cfg.theorems = parse_theorem_list(sw_theorems);
            if (!sw_alphas.empty()) cfg.alphas = sw_alphas;
            if (!sw_s.empty()) cfg.s_values = sw_s;
            if (sw_x_points) {
                cfg.x_points = *sw_x_points;
                cfg.x_values.clear();
            }
            if (sw_oracle) cfg.oracle_samples = *sw_oracle;

            const SweepResult res = run_sweep(cfg, sw_serial ? Execution::Serial : Execution::Parallel);
            const ReportFormat format = sw_format == "json" ? ReportFormat::Json : ReportFormat::Csv;
            if (sw_out.empty()) {
                if (format == ReportFormat::Csv) emit_csv(res, std::cout);
                else std::cout << to_json(res).dump(2) << '\n';
            } else {
                emit_report(res, format, sw_out);
            }
            const auto& s = res.summary;
            std::cerr << "total=" << s.total << " passed=" << s.passed << " failed=" << s.failed
                      << " skipped=" << s.skipped << " worst_margin=" << fmt(s.worst_margin)
                      << " worst_residual=" << fmt(s.worst_residual)
                      << " identity_failures=" << s.identity_failures
                      << " oracle_failures=" << s.oracle_failures
                      << " convergence_errors=" << s.convergence_errors << '\n';
            return res.ok() ? kExitOk : kExitFailure;
        }
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ConvergenceError& e) {
        std::cerr << "error: " << e.what() << " (best estimate " << fmt(e.best_estimate()) << " +- "
                  << fmt(e.error_bound()) << ")\n";
        return kExitFailure;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitUsage;
}
