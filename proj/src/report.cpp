#include "fracineq/harness.hpp"

#include "fracineq/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <set>

namespace fracineq {

using nlohmann::json;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

json num(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }
json opt_num(const std::optional<double>& v) { return v ? num(*v) : json(nullptr); }
double get_num(const json& j) { return j.is_null() ? kNaN : j.get<double>(); }
std::optional<double> get_opt(const json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<double>();
}

bool same(double l, double r) { return (std::isnan(l) && std::isnan(r)) || l == r; }
bool same(const std::optional<double>& l, const std::optional<double>& r) {
    return l.has_value() == r.has_value() && (!l || same(*l, *r));
}

json to_json(const FracParams& p) {
    return {{"a", num(p.a)},         {"b", num(p.b)},        {"x", num(p.x)},
            {"alpha", num(p.alpha)}, {"s", num(p.s)},        {"p", opt_num(p.p)},
            {"q", opt_num(p.q)},     {"M", opt_num(p.M)}};
}

FracParams params_from_json(const json& j) {
    FracParams p;
    p.a = get_num(j.at("a"));
    p.b = get_num(j.at("b"));
    p.x = get_num(j.at("x"));
    p.alpha = get_num(j.at("alpha"));
    p.s = get_num(j.at("s"));
    p.p = get_opt(j.at("p"));
    p.q = get_opt(j.at("q"));
    p.M = get_opt(j.at("M"));
    return p;
}

json to_json(const IdentityResidual& r) {
    return {{"lhs", num(r.lhs)},
            {"rhs", num(r.rhs)},
            {"residual", num(r.residual)},
            {"scale", num(r.scale)},
            {"rel_residual", num(r.rel_residual)},
            {"quad_error_budget", num(r.quad_error_budget)}};
}

IdentityResidual residual_from_json(const json& j) {
    IdentityResidual r;
    r.lhs = get_num(j.at("lhs"));
    r.rhs = get_num(j.at("rhs"));
    r.residual = get_num(j.at("residual"));
    r.scale = get_num(j.at("scale"));
    r.rel_residual = get_num(j.at("rel_residual"));
    r.quad_error_budget = get_num(j.at("quad_error_budget"));
    return r;
}

ReportStatus status_from_string(const std::string& s) {
    for (auto st : {ReportStatus::Asserted, ReportStatus::Skipped, ReportStatus::Informational}) {
        if (to_string(st) == s) return st;
    }
    throw ConfigError("unknown report status '" + s + "'");
}

} // namespace

std::string format_number(double v) {
    if (std::isnan(v)) return "";
    if (v == 0.0) v = 0.0; // print negative zero as 0
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

json to_json(const SweepConfig& cfg) {
    json pq = json::array();
    for (const auto& [p, q] : cfg.pq_pairs) pq.push_back({p, q});
    json theorems = json::array();
    for (TheoremId id : cfg.theorems) theorems.push_back(std::string(to_string(id)));
    return {{"functions", cfg.functions},
            {"alphas", cfg.alphas},
            {"s_values", cfg.s_values},
            {"pq_pairs", pq},
            {"x_points", cfg.x_points},
            {"x_values", cfg.x_values},
            {"interval", {cfg.a, cfg.b}},
            {"identity_tol", cfg.identity_tol},
            {"margin_tol", cfg.margin_tol},
            {"cert_tol", cfg.cert_tol},
            {"cert_grid", cfg.cert_grid},
            {"quadrature",
             {{"rel_tol", cfg.quad.rel_tol},
              {"abs_tol", cfg.quad.abs_tol},
              {"max_subdivisions", cfg.quad.max_subdivisions},
              {"rule", std::string(to_string(cfg.quad.rule))}}},
            {"theorems", theorems},
            {"seed", cfg.seed},
            {"oracle_samples", cfg.oracle_samples}};
}

SweepConfig config_from_json(const json& j, SweepConfig base) {
    if (!j.is_object()) throw ConfigError("sweep config must be a JSON object");
    static const std::set<std::string> known = {
        "functions", "alphas",     "s_values",  "pq_pairs",   "x_points", "x_values",
        "interval",  "identity_tol", "margin_tol", "cert_tol", "cert_grid", "quadrature",
        "theorems",  "seed",       "oracle_samples"};
    for (const auto& [key, _] : j.items()) {
        if (!known.count(key)) throw ConfigError("sweep config: unknown key '" + key + "'");
    }
    try {
        if (j.contains("functions")) base.functions = j["functions"].get<std::vector<std::string>>();
        if (j.contains("alphas")) base.alphas = j["alphas"].get<std::vector<double>>();
        if (j.contains("s_values")) base.s_values = j["s_values"].get<std::vector<double>>();
        if (j.contains("pq_pairs")) {
            base.pq_pairs.clear();
            for (const auto& pair : j["pq_pairs"]) {
                base.pq_pairs.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
            }
        }
        if (j.contains("x_points")) base.x_points = j["x_points"].get<int>();
        if (j.contains("x_values")) base.x_values = j["x_values"].get<std::vector<double>>();
        if (j.contains("interval")) {
            base.a = j["interval"].at(0).get<double>();
            base.b = j["interval"].at(1).get<double>();
        }
        if (j.contains("identity_tol")) base.identity_tol = j["identity_tol"].get<double>();
        if (j.contains("margin_tol")) base.margin_tol = j["margin_tol"].get<double>();
        if (j.contains("cert_tol")) base.cert_tol = j["cert_tol"].get<double>();
        if (j.contains("cert_grid")) base.cert_grid = j["cert_grid"].get<int>();
        if (j.contains("quadrature")) {
            const json& qj = j["quadrature"];
            if (qj.contains("rel_tol")) base.quad.rel_tol = qj["rel_tol"].get<double>();
            if (qj.contains("abs_tol")) base.quad.abs_tol = qj["abs_tol"].get<double>();
            if (qj.contains("max_subdivisions")) {
                base.quad.max_subdivisions = qj["max_subdivisions"].get<int>();
            }
            if (qj.contains("rule")) {
                const auto name = qj["rule"].get<std::string>();
                const auto rule = parse_quad_rule(name);
                if (!rule) throw ConfigError("quadrature.rule: unknown rule '" + name + "'");
                base.quad.rule = *rule;
            }
        }
        if (j.contains("theorems")) {
            base.theorems = parse_theorem_list(j["theorems"].get<std::vector<std::string>>());
        }
        if (j.contains("seed")) base.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("oracle_samples")) base.oracle_samples = j["oracle_samples"].get<int>();
    } catch (const json::exception& e) {
        throw ConfigError(std::string("sweep config: ") + e.what());
    }
    return base;
}

void emit_csv(const SweepResult& res, std::ostream& out) {
    out << kCsvHeader << '\n';
    for (const auto& r : res.reports) {
        out << to_string(r.theorem) << ',' << r.function << ',' << format_number(r.prm.alpha) << ','
            << format_number(r.prm.s) << ',' << (r.prm.p ? format_number(*r.prm.p) : "") << ','
            << (r.prm.q ? format_number(*r.prm.q) : "") << ',' << format_number(r.prm.x) << ','
            << format_number(r.lhs) << ',' << format_number(r.rhs) << ','
            << format_number(r.margin) << ',' << (r.holds ? "true" : "false") << ','
            << format_number(r.quad_error_budget) << ',' << to_string(r.status) << '\n';
    }
}

json to_json(const SweepResult& res) {
    json reports = json::array();
    for (const auto& r : res.reports) {
        reports.push_back({{"theorem_id", std::string(to_string(r.theorem))},
                           {"function", r.function},
                           {"params", to_json(r.prm)},
                           {"lhs", num(r.lhs)},
                           {"rhs", num(r.rhs)},
                           {"margin", num(r.margin)},
                           {"holds", r.holds},
                           {"quad_error_budget", num(r.quad_error_budget)},
                           {"status", std::string(to_string(r.status))},
                           {"note", r.note}});
    }
    json residuals = json::array();
    for (const auto& r : res.residuals) {
        residuals.push_back({{"function", r.function},
                             {"alpha", num(r.alpha)},
                             {"x", num(r.x)},
                             {"residual", to_json(r.residual)},
                             {"passed", r.passed}});
    }
    json oracle = json::array();
    for (const auto& o : res.oracle_checks) {
        oracle.push_back({{"function", o.function},
                          {"alpha", num(o.alpha)},
                          {"x", num(o.x)},
                          {"adaptive_left", num(o.adaptive_left)},
                          {"oracle_left", num(o.oracle_left)},
                          {"adaptive_right", num(o.adaptive_right)},
                          {"oracle_right", num(o.oracle_right)},
                          {"rel_disagreement", num(o.rel_disagreement)},
                          {"passed", o.passed}});
    }
    json errors = json::array();
    for (const auto& e : res.errors) {
        errors.push_back({{"function", e.function},
                          {"alpha", num(e.alpha)},
                          {"x", num(e.x)},
                          {"message", e.message}});
    }
    const SweepSummary& s = res.summary;
    return {{"reports", reports},
            {"residuals", residuals},
            {"oracle_checks", oracle},
            {"errors", errors},
            {"summary",
             {{"total", s.total},
              {"passed", s.passed},
              {"failed", s.failed},
              {"skipped", s.skipped},
              {"worst_margin", num(s.worst_margin)},
              {"worst_residual", num(s.worst_residual)},
              {"identity_failures", s.identity_failures},
              {"oracle_failures", s.oracle_failures},
              {"convergence_errors", s.convergence_errors}}},
            {"provenance", res.provenance}};
}

SweepResult result_from_json(const json& j) {
    SweepResult res;
    for (const auto& r : j.at("reports")) {
        InequalityReport rep;
        const auto id = parse_theorem(r.at("theorem_id").get<std::string>());
        if (!id) throw ConfigError("unknown theorem id in report");
        rep.theorem = *id;
        rep.function = r.at("function").get<std::string>();
        rep.prm = params_from_json(r.at("params"));
        rep.lhs = get_num(r.at("lhs"));
        rep.rhs = get_num(r.at("rhs"));
        rep.margin = get_num(r.at("margin"));
        rep.holds = r.at("holds").get<bool>();
        rep.quad_error_budget = get_num(r.at("quad_error_budget"));
        rep.status = status_from_string(r.at("status").get<std::string>());
        rep.note = r.at("note").get<std::string>();
        res.reports.push_back(std::move(rep));
    }
    for (const auto& r : j.at("residuals")) {
        ResidualRow row;
        row.function = r.at("function").get<std::string>();
        row.alpha = get_num(r.at("alpha"));
        row.x = get_num(r.at("x"));
        row.residual = residual_from_json(r.at("residual"));
        row.passed = r.at("passed").get<bool>();
        res.residuals.push_back(std::move(row));
    }
    for (const auto& o : j.at("oracle_checks")) {
        OracleCheck oc;
        oc.function = o.at("function").get<std::string>();
        oc.alpha = get_num(o.at("alpha"));
        oc.x = get_num(o.at("x"));
        oc.adaptive_left = get_num(o.at("adaptive_left"));
        oc.oracle_left = get_num(o.at("oracle_left"));
        oc.adaptive_right = get_num(o.at("adaptive_right"));
        oc.oracle_right = get_num(o.at("oracle_right"));
        oc.rel_disagreement = get_num(o.at("rel_disagreement"));
        oc.passed = o.at("passed").get<bool>();
        res.oracle_checks.push_back(std::move(oc));
    }
    for (const auto& e : j.at("errors")) {
        res.errors.push_back({e.at("function").get<std::string>(), get_num(e.at("alpha")),
                              get_num(e.at("x")), e.at("message").get<std::string>()});
    }
    const json& s = j.at("summary");
    res.summary.total = s.at("total").get<std::size_t>();
    res.summary.passed = s.at("passed").get<std::size_t>();
    res.summary.failed = s.at("failed").get<std::size_t>();
    res.summary.skipped = s.at("skipped").get<std::size_t>();
    res.summary.worst_margin = get_num(s.at("worst_margin"));
    res.summary.worst_residual = get_num(s.at("worst_residual"));
    res.summary.identity_failures = s.at("identity_failures").get<std::size_t>();
    res.summary.oracle_failures = s.at("oracle_failures").get<std::size_t>();
    res.summary.convergence_errors = s.at("convergence_errors").get<std::size_t>();
    res.provenance = j.at("provenance");
    return res;
}

void emit_report(const SweepResult& res, ReportFormat format, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    if (format == ReportFormat::Csv) {
        emit_csv(res, out);
    } else {
        out << to_json(res).dump(2) << '\n';
    }
    out.flush();
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

bool equivalent(const SweepResult& l, const SweepResult& r) {
    if (l.reports.size() != r.reports.size() || l.residuals.size() != r.residuals.size() ||
        l.oracle_checks.size() != r.oracle_checks.size() || l.errors.size() != r.errors.size()) {
        return false;
    }
    for (std::size_t i = 0; i < l.reports.size(); ++i) {
        const auto& a = l.reports[i];
        const auto& b = r.reports[i];
        if (a.theorem != b.theorem || a.function != b.function || !same(a.prm.a, b.prm.a) ||
            !same(a.prm.b, b.prm.b) || !same(a.prm.x, b.prm.x) || !same(a.prm.alpha, b.prm.alpha) ||
            !same(a.prm.s, b.prm.s) || !same(a.prm.p, b.prm.p) || !same(a.prm.q, b.prm.q) ||
            !same(a.prm.M, b.prm.M) || !same(a.lhs, b.lhs) || !same(a.rhs, b.rhs) ||
            !same(a.margin, b.margin) || a.holds != b.holds ||
            !same(a.quad_error_budget, b.quad_error_budget) || a.status != b.status ||
            a.note != b.note) {
            return false;
        }
    }
    for (std::size_t i = 0; i < l.residuals.size(); ++i) {
        const auto& a = l.residuals[i];
        const auto& b = r.residuals[i];
        if (a.function != b.function || !same(a.alpha, b.alpha) || !same(a.x, b.x) ||
            a.passed != b.passed || !same(a.residual.lhs, b.residual.lhs) ||
            !same(a.residual.rhs, b.residual.rhs) || !same(a.residual.residual, b.residual.residual) ||
            !same(a.residual.scale, b.residual.scale) ||
            !same(a.residual.rel_residual, b.residual.rel_residual) ||
            !same(a.residual.quad_error_budget, b.residual.quad_error_budget)) {
            return false;
        }
    }
    for (std::size_t i = 0; i < l.oracle_checks.size(); ++i) {
        const auto& a = l.oracle_checks[i];
        const auto& b = r.oracle_checks[i];
        if (a.function != b.function || !same(a.alpha, b.alpha) || !same(a.x, b.x) ||
            !same(a.adaptive_left, b.adaptive_left) || !same(a.oracle_left, b.oracle_left) ||
            !same(a.adaptive_right, b.adaptive_right) || !same(a.oracle_right, b.oracle_right) ||
            !same(a.rel_disagreement, b.rel_disagreement) || a.passed != b.passed) {
            return false;
        }
    }
    for (std::size_t i = 0; i < l.errors.size(); ++i) {
        const auto& a = l.errors[i];
        const auto& b = r.errors[i];
        if (a.function != b.function || !same(a.alpha, b.alpha) || !same(a.x, b.x) ||
            a.message != b.message) {
            return false;
        }
    }
    const auto& sa = l.summary;
    const auto& sb = r.summary;
    if (sa.total != sb.total || sa.passed != sb.passed || sa.failed != sb.failed ||
        sa.skipped != sb.skipped || !same(sa.worst_margin, sb.worst_margin) ||
        !same(sa.worst_residual, sb.worst_residual) || sa.identity_failures != sb.identity_failures ||
        sa.oracle_failures != sb.oracle_failures || sa.convergence_errors != sb.convergence_errors) {
        return false;
    }
    json pa = l.provenance;
    json pb = r.provenance;
    if (pa.is_object()) pa.erase("timestamp");
    if (pb.is_object()) pb.erase("timestamp");
    return pa == pb;
}

} // namespace fracineq
