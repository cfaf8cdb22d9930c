#include "doctest.h"

#include "fracineq/errors.hpp"
#include "fracineq/harness.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace fracineq;

namespace {

SweepConfig small_config() {
    SweepConfig cfg = SweepConfig::defaults();
    cfg.functions = {"square", "three_halves", "sine"};
    cfg.alphas = {0.5, 1.5};
    cfg.s_values = {0.5, 1.0};
    cfg.x_points = 5;
    return cfg;
}

std::string csv_of(const SweepResult& res) {
    std::ostringstream out;
    emit_csv(res, out);
    return out.str();
}

} // namespace

TEST_CASE("config validation lists offending fields") {
    SweepConfig cfg = SweepConfig::defaults();
    CHECK_NOTHROW(cfg.validate());

    auto bad = cfg;
    bad.functions.clear();
    CHECK_THROWS_AS(bad.validate(), ConfigError);

    bad = cfg;
    bad.s_values = {0.0, 1.5};
    bad.alphas = {-1.0};
    bad.pq_pairs = {{2.0, 3.0}};
    try {
        bad.validate();
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("s_values") != std::string::npos);
        CHECK(msg.find("alphas") != std::string::npos);
        CHECK(msg.find("pq_pairs") != std::string::npos);
    }

    bad = cfg;
    bad.a = 1.0;
    bad.b = 0.0;
    CHECK_THROWS_AS(bad.validate(), ConfigError);

    bad = cfg;
    bad.functions = {"nope"};
    CHECK_THROWS_AS(bad.validate(), ConfigError);

    bad = cfg;
    bad.a = -0.5;
    bad.functions = {"sine"};
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad.theorems = {TheoremId::e1};
    CHECK_NOTHROW(bad.validate());
}

TEST_CASE("x grid covers both ends or uses explicit values") {
    SweepConfig cfg = SweepConfig::defaults();
    const auto g = cfg.x_grid();
    REQUIRE(g.size() == 11);
    CHECK(g.front() == 0.0);
    CHECK(g.back() == 1.0);
    cfg.x_values = {0.25, 0.75};
    CHECK(cfg.x_grid() == std::vector<double>{0.25, 0.75});
}

TEST_CASE("json config parsing, overrides and unknown keys") {
    const auto j = nlohmann::json::parse(R"({
        "functions": ["square"], "alphas": [0.5], "s_values": [1.0],
        "pq_pairs": [[2, 2]], "x_values": [0.0, 1.0], "interval": [0, 1],
        "theorems": ["E6", "e13"], "seed": 42,
        "quadrature": {"rel_tol": 1e-11, "rule": "gauss-jacobi"}
    })");
    const SweepConfig cfg = config_from_json(j);
    CHECK(cfg.functions == std::vector<std::string>{"square"});
    CHECK(cfg.seed == 42);
    CHECK(cfg.quad.rel_tol == 1e-11);
    CHECK(cfg.quad.rule == QuadRule::GaussJacobi);
    CHECK(cfg.theorems ==
          std::vector<TheoremId>{TheoremId::E6, TheoremId::e13_lower, TheoremId::e13_upper});
    CHECK(config_from_json(to_json(cfg)).seed == 42);
    CHECK(to_json(config_from_json(to_json(cfg))) == to_json(cfg));

    CHECK_THROWS_AS(config_from_json(nlohmann::json::parse(R"({"alpha": [1]})")), ConfigError);
    CHECK_THROWS_AS(config_from_json(nlohmann::json::parse(R"({"theorems": ["E99"]})")), ConfigError);
    CHECK_THROWS_AS(config_from_json(nlohmann::json::parse(R"({"alphas": "one"})")), ConfigError);
}

TEST_CASE("csv header is the documented schema") {
    SweepConfig cfg = SweepConfig::defaults();
    cfg.functions = {"square"};
    cfg.alphas = {0.5};
    cfg.s_values = {0.5};
    cfg.x_values = {0.5};
    cfg.theorems = {TheoremId::E6};
    const SweepResult res = run_sweep(cfg);
    REQUIRE(res.reports.size() == 1);
    const std::string csv = csv_of(res);
    CHECK(csv.substr(0, csv.find('\n')) == kCsvHeader);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);
    CHECK(res.reports[0].holds);
}

TEST_CASE("summary invariants") {
    const SweepResult res = run_sweep(small_config());
    const auto& s = res.summary;
    CHECK(s.total == res.reports.size());
    CHECK(s.total == s.passed + s.failed + s.skipped);
    CHECK(s.failed == 0);
    double worst = INFINITY;
    for (const auto& r : res.reports)
        if (r.status == ReportStatus::Asserted) worst = std::min(worst, r.margin);
    CHECK(s.worst_margin == worst);
    CHECK(res.ok());
    CHECK(std::is_sorted(res.reports.begin(), res.reports.end(), report_order));
    CHECK(res.provenance.contains("version"));
    CHECK(res.provenance.contains("config"));
}

TEST_CASE("two runs produce byte-identical csv") {
    const auto cfg = small_config();
    CHECK(csv_of(run_sweep(cfg)) == csv_of(run_sweep(cfg)));
}

TEST_CASE("serial and parallel runs agree") {
    auto cfg = small_config();
    cfg.oracle_samples = 3;
    const SweepResult par = run_sweep(cfg, Execution::Parallel);
    const SweepResult ser = run_sweep(cfg, Execution::Serial);
    CHECK(equivalent(par, ser));
    CHECK(csv_of(par) == csv_of(ser));
    CHECK(par.oracle_checks.size() == 3);
    for (const auto& o : par.oracle_checks) CHECK(o.passed);
}

TEST_CASE("seed selects the oracle draws") {
    auto cfg = small_config();
    cfg.theorems = {TheoremId::e1};
    cfg.oracle_samples = 4;
    cfg.seed = 1;
    const auto a = run_sweep(cfg);
    cfg.seed = 2;
    const auto b = run_sweep(cfg);
    bool differs = false;
    for (std::size_t i = 0; i < a.oracle_checks.size(); ++i)
        differs |= a.oracle_checks[i].x != b.oracle_checks[i].x ||
                   a.oracle_checks[i].function != b.oracle_checks[i].function;
    CHECK(differs);
    CHECK_FALSE(equivalent(a, b));
}

TEST_CASE("json report round trips") {
    const SweepResult res = run_sweep(small_config());
    const SweepResult back = result_from_json(nlohmann::json::parse(to_json(res).dump()));
    CHECK(equivalent(res, back));
    CHECK(to_json(back) == to_json(res));
    CHECK(csv_of(back) == csv_of(res));
}

TEST_CASE("report files and I/O errors") {
    const SweepResult res = run_sweep(small_config());
    const auto dir = std::filesystem::temp_directory_path();
    const auto csv = (dir / "fracineq_test_report.csv").string();
    emit_report(res, ReportFormat::Csv, csv);
    std::ifstream in(csv);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == csv_of(res));
    std::filesystem::remove(csv);
    CHECK_THROWS_AS(emit_report(res, ReportFormat::Json, "/nonexistent-dir/x/report.json"),
                    std::runtime_error);
}

TEST_CASE("classical sharpness configuration") {
    SweepConfig cfg = SweepConfig::defaults();
    cfg.functions = {"affine"};
    cfg.theorems = {TheoremId::e1};
    cfg.x_values = {cfg.a, cfg.b};
    const SweepResult res = run_sweep(cfg);
    REQUIRE(res.reports.size() == 2);
    for (const auto& r : res.reports) {
        CHECK(r.theorem == TheoremId::e1);
        CHECK(std::abs(r.margin) <= 1e-12);
        CHECK(r.holds);
    }
}

TEST_CASE("number formatting") {
    CHECK(format_number(0.5) == "0.5");
    CHECK(format_number(NAN).empty());
    CHECK(format_number(-0.0) == "0");
    CHECK(std::stod(format_number(0.1)) == 0.1);
}
