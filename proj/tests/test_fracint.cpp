#include "doctest.h"

#include "fracineq/errors.hpp"
#include "fracineq/fracint.hpp"
#include "fracineq/specfun.hpp"

#include <cmath>
#include <random>

using namespace fracineq;

namespace {

const QuadratureConfig kCfg{};

Function1D shifted_power(double a, double beta) {
    Function1D f;
    f.name = "power";
    f.eval = [=](double t) { return beta == 0.0 ? 1.0 : std::pow(t - a, beta); };
    f.deriv = [=](double t) { return beta == 0.0 ? 0.0 : beta * std::pow(t - a, beta - 1.0); };
    f.domain_lo = a;
    f.domain_hi = a + 4.0;
    return f;
}

double rel(double got, double want) { return std::abs(got - want) / std::max(1e-300, std::abs(want)); }

const Function1D& cat(const char* name) { return catalog_entry(name).function; }

} // namespace

TEST_CASE("left and right integrals: worked values") {
    CHECK(rel(fracint::rl_left(cat("constant"), 0, 1, 0.5, kCfg).value, 1.1283791670955125739) <= 1e-12);
    CHECK(rel(fracint::rl_left(cat("square"), 0, 1, 1.0, kCfg).value, 1.0 / 3.0) <= 1e-12);
    CHECK(rel(fracint::rl_left(cat("linear"), 0, 1, 0.5, kCfg).value, 0.75225277806367504926) <= 1e-12);
    CHECK(rel(fracint::rl_right(cat("constant"), 0, 1, 0.5, kCfg).value, 1.1283791670955125739) <= 1e-12);
    CHECK(rel(fracint::rl_right(cat("square"), 0, 1, 1.0, kCfg).value, 1.0 / 3.0) <= 1e-12);
    const Function1D two = linear_combination(2.0, cat("constant"), 0.0, cat("constant"));
    CHECK(rel(fracint::rl_right(two, 0.25, 1, 0.75, kCfg).value, 1.7538033057029883271) <= 1e-12);
}

TEST_CASE("lemma pair: worked values and degenerate endpoints") {
    FracParams prm;
    prm.alpha = 1.0;
    auto [l, r] = fracint::lemma_pair(cat("constant"), prm, kCfg);
    CHECK(l.value == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(r.value == doctest::Approx(0.5).epsilon(1e-13));
    prm.alpha = 0.5;
    std::tie(l, r) = fracint::lemma_pair(cat("constant"), prm, kCfg);
    CHECK(rel(l.value, 0.79788456080286535588) <= 1e-12);
    CHECK(rel(r.value, 0.79788456080286535588) <= 1e-12);
    prm.alpha = 1.0;
    std::tie(l, r) = fracint::lemma_pair(cat("linear"), prm, kCfg);
    CHECK(l.value == doctest::Approx(0.125).epsilon(1e-13));
    CHECK(r.value == doctest::Approx(0.375).epsilon(1e-13));
    prm.x = 0.0;
    std::tie(l, r) = fracint::lemma_pair(cat("linear"), prm, kCfg);
    CHECK(l.value == 0.0);
    CHECK(r.value == doctest::Approx(0.5).epsilon(1e-13));
    prm.x = 1.0;
    std::tie(l, r) = fracint::lemma_pair(cat("linear"), prm, kCfg);
    CHECK(r.value == 0.0);
}

TEST_CASE("power rule across rules") {
    for (QuadRule rule : {QuadRule::TransformedAdaptive, QuadRule::GaussJacobi}) {
        QuadratureConfig cfg;
        cfg.rule = rule;
        for (double beta : {0.0, 0.5, 1.0, 2.0}) {
            // sqrt(t - a) is not smooth at the far end, which defeats a polynomial-exact rule
            if (rule == QuadRule::GaussJacobi && beta == 0.5) continue;
            const double a = 0.3;
            const Function1D f = shifted_power(a, beta);
            for (double alpha : {0.5, 1.0, 1.5}) {
                for (double x : {0.4, 0.8, 1.3, 2.0, 3.1}) {
                    const double want = specfun::gamma(beta + 1) / specfun::gamma(alpha + beta + 1) *
                                        std::pow(x - a, alpha + beta);
                    CAPTURE(to_string(rule));
                    CAPTURE(beta);
                    CAPTURE(alpha);
                    CAPTURE(x);
                    CHECK(rel(fracint::rl_left(f, a, x, alpha, cfg).value, want) <= 1e-9);
                }
            }
        }
    }
}

TEST_CASE("alpha = 1 reduces to the classical integral") {
    QuadratureConfig tight;
    tight.rel_tol = 1e-13;
    for (const auto& e : builtin_catalog()) {
        const auto& f = e.function;
        const double a = std::max(0.0, f.domain_lo);
        for (double x : {0.2, 0.5, 0.9}) {
            const double plain = quad::adaptive(f.eval, a, x, tight).value;
            CAPTURE(f.name);
            CHECK(rel(fracint::rl_left(f, a, x, 1.0, kCfg).value, plain) <= 1e-10);
        }
    }
}

TEST_CASE("linearity and positivity") {
    const auto& sq = cat("square");
    const auto& ex = cat("exp");
    const Function1D h = linear_combination(1.5, sq, -0.25, ex);
    for (double alpha : {0.25, 0.75, 2.0}) {
        const double lhs = fracint::rl_left(h, 0, 0.8, alpha, kCfg).value;
        const double rhs = 1.5 * fracint::rl_left(sq, 0, 0.8, alpha, kCfg).value -
                           0.25 * fracint::rl_left(ex, 0, 0.8, alpha, kCfg).value;
        CHECK(rel(lhs, rhs) <= 1e-10);
        for (const auto& e : builtin_catalog()) {
            const auto& f = e.function;
            const double a = std::max(0.0, f.domain_lo);
            if (f.eval(a) >= 0 && f.eval(1.0) >= 0 && e.function.name != "sine")
                CHECK(fracint::rl_left(f, a, 1.0, alpha, kCfg).value >= -kCfg.abs_tol);
        }
    }
}

TEST_CASE("adaptive engine agrees with the midpoint oracle on seeded draws") {
    std::mt19937_64 rng(11);
    const auto& catalog = builtin_catalog();
    std::uniform_int_distribution<std::size_t> pick_f(0, catalog.size() - 1);
    std::uniform_real_distribution<double> pick_alpha(0.25, 2.0);
    std::uniform_real_distribution<double> pick_x(0.05, 0.95);
    for (int i = 0; i < 10; ++i) {
        const auto& f = catalog[pick_f(rng)].function;
        const double alpha = pick_alpha(rng);
        const double x = pick_x(rng);
        const double a = std::max(0.0, f.domain_lo);
        const double adaptive = fracint::rl_left(f, a, x, alpha, kCfg).value;
        const double oracle = fracint::oracle(f, x, a, alpha, quad::kOraclePanels, Execution::Parallel).value;
        CAPTURE(f.name);
        CAPTURE(alpha);
        CAPTURE(x);
        CHECK(std::abs(adaptive - oracle) <= 1e-8 * std::max(1.0, std::abs(oracle)));
    }
    CHECK(rel(fracint::oracle(cat("constant"), 1.0, 0.0, 0.5).value, 1.1283791670955125739) <= 1e-8);
    CHECK(std::abs(fracint::oracle(cat("square"), 1.0, 0.0, 1.0).value - 1.0 / 3.0) <= 1e-10);
}

TEST_CASE("oracle-midpoint rule is selectable through the config") {
    QuadratureConfig cfg;
    cfg.rule = QuadRule::OracleMidpoint;
    CHECK(rel(fracint::rl_right(cat("exp"), 0.2, 1.0, 0.6, cfg).value,
              fracint::rl_right(cat("exp"), 0.2, 1.0, 0.6, kCfg).value) <= 1e-8);
}

TEST_CASE("error paths") {
    CHECK_THROWS_AS(fracint::rl_left(cat("square"), 0.5, 0.5, 0.5, kCfg), DomainError);
    CHECK_THROWS_AS(fracint::rl_right(cat("square"), 0.7, 0.2, 0.5, kCfg), DomainError);
    CHECK_THROWS_AS(fracint::rl_left(cat("square"), 0.0, 1.5, 0.5, kCfg), DomainError);
    CHECK_THROWS(fracint::rl_left(cat("square"), 0.0, 0.5, 0.0, kCfg));
    FracParams prm;
    prm.alpha = -1.0;
    CHECK_THROWS_AS(prm.validate(), ConfigError);
    prm = {};
    prm.p = 2.0;
    prm.q = 3.0;
    CHECK_THROWS_AS(prm.validate(), ConfigError);
    prm.q = 2.0;
    CHECK_NOTHROW(prm.validate());
    prm.x = 2.0;
    CHECK_THROWS_AS(prm.validate(), ConfigError);
    CHECK(conjugate_exponent(3.0) == doctest::Approx(1.5));
}
