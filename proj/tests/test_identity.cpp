#include "doctest.h"

#include "fracineq/identity.hpp"

#include <cmath>
#include <string>

using namespace fracineq;

namespace {
const QuadratureConfig kCfg{};
const Function1D& cat(const char* name) { return catalog_entry(name).function; }

FracParams at(double x, double alpha, double a = 0.0, double b = 1.0) {
    FracParams p;
    p.a = a;
    p.b = b;
    p.x = x;
    p.alpha = alpha;
    return p;
}
} // namespace

TEST_CASE("constant functions make both sides vanish") {
    for (double alpha : {0.25, 1.0, 2.0}) {
        for (double x : {0.0, 0.3, 1.0}) {
            const auto r = check_e1(cat("constant"), at(x, alpha), kCfg);
            CHECK(std::abs(r.lhs) <= 1e-14);
            CHECK(r.rhs == 0.0);
            CHECK(r.passed());
        }
    }
}

TEST_CASE("worked identity values") {
    auto r = check_e1(cat("linear"), at(0.5, 1.0), kCfg);
    CHECK(std::abs(r.lhs) <= 1e-14);
    CHECK(std::abs(r.rhs) <= 1e-14);

    r = check_e1(cat("square"), at(0.5, 0.5), kCfg);
    CHECK(r.rel_residual <= 1e-8);
    CHECK(r.lhs == doctest::Approx(-0.18856180831641267317).epsilon(1e-10));
    CHECK(r.rhs == doctest::Approx(-0.18856180831641267317).epsilon(1e-10));

    auto [e4, e5] = check_e4_e5(cat("constant"), at(0.5, 1.0), kCfg);
    CHECK(std::abs(e4.lhs) <= 1e-14);
    CHECK(std::abs(e4.rhs) <= 1e-14);
    std::tie(e4, e5) = check_e4_e5(cat("linear"), at(0.5, 1.0), kCfg);
    CHECK(e4.lhs == doctest::Approx(0.125).epsilon(1e-13));
    CHECK(e4.rhs == doctest::Approx(0.125).epsilon(1e-13));

    std::tie(e4, e5) = check_e4_e5(cat("exp"), at(0.3, 0.75), kCfg);
    CHECK(e4.rel_residual <= 1e-8);
    CHECK(e5.rel_residual <= 1e-8);
    CHECK(e4.lhs == doctest::Approx(0.084338645425010458151).epsilon(1e-9));
}

TEST_CASE("E1 residual is the difference of the two halves") {
    for (std::string name : {"square", "exp", "three_halves", "sine"}) {
        for (double alpha : {0.25, 0.75, 1.5}) {
            const auto prm = at(0.35, alpha);
            const auto e1 = check_e1(cat(name.c_str()), prm, kCfg);
            const auto [e4, e5] = check_e4_e5(cat(name.c_str()), prm, kCfg);
            const double budget = e1.quad_error_budget * e1.scale + e4.quad_error_budget * e4.scale +
                                  e5.quad_error_budget * e5.scale;
            CAPTURE(name);
            CAPTURE(alpha);
            CHECK(std::abs(e1.residual - (e4.residual - e5.residual)) <= 10 * budget + 1e-14);
            CHECK(std::abs(e1.lhs - (e4.lhs - e5.lhs)) <= 1e-13 * e1.scale);
            CHECK(std::abs(e1.rhs - (e4.rhs - e5.rhs)) <= 1e-13 * e1.scale);
        }
    }
}

TEST_CASE("identity holds across the catalog, orders and interior points") {
    for (const auto& e : builtin_catalog()) {
        const double a = std::max(0.0, e.function.domain_lo);
        for (double alpha : {0.25, 0.5, 0.75, 1.0, 1.5, 2.0}) {
            for (int i = 1; i <= 9; ++i) {
                const auto prm = at(a + (1.0 - a) * i / 10.0, alpha, a, 1.0);
                const auto r = check_e1(e.function, prm, kCfg);
                CAPTURE(e.function.name);
                CAPTURE(alpha);
                CAPTURE(prm.x);
                REQUIRE(r.passed());
            }
        }
    }
}

TEST_CASE("identity also holds off the unit interval and at the endpoints") {
    for (double x : {-1.5, -0.2, 0.0, 1.1, 2.0}) {
        const auto r = check_e1(cat("sine"), at(x, 0.6, -1.5, 2.0), kCfg);
        CAPTURE(x);
        CHECK(r.passed());
    }
}

TEST_CASE("classical identity coincides with the alpha = 1 case") {
    const auto r = check_classical_lemma(cat("square"), 0.0, 1.0, 0.5, kCfg);
    CHECK(r.lhs == doctest::Approx(-1.0 / 12.0).epsilon(1e-12));
    CHECK(std::abs(r.rhs - r.lhs) <= 1e-10);
    const auto c = check_classical_lemma(cat("constant"), 0.0, 1.0, 0.3, kCfg);
    CHECK(std::abs(c.lhs) <= 1e-15);
    CHECK(c.rhs == 0.0);
    const auto lin = check_classical_lemma(cat("linear"), 0.2, 0.9, 0.2, kCfg);
    CHECK(lin.lhs == doctest::Approx(-0.35).epsilon(1e-13));
    CHECK(lin.rhs == doctest::Approx(-0.35).epsilon(1e-13));
    for (const auto& e : builtin_catalog()) {
        const double a = std::max(0.0, e.function.domain_lo);
        for (double x : {a, 0.25, 0.5, 0.8, 1.0}) {
            const auto cl = check_classical_lemma(e.function, a, 1.0, x, kCfg);
            CAPTURE(e.function.name);
            CAPTURE(x);
            CHECK(cl.passed());
            CHECK(cl.e1_deviation <= 1e-12);
        }
    }
}

TEST_CASE("residual bookkeeping") {
    const auto r = make_residual(3.0, 1.0, 0.5);
    CHECK(r.residual == 2.0);
    CHECK(r.scale == 3.0);
    CHECK(r.rel_residual == doctest::Approx(2.0 / 3.0));
    CHECK(r.quad_error_budget == doctest::Approx(0.5 / 3.0));
    CHECK(r.passed(1e-8)); // 10x the budget covers the residual
    CHECK_FALSE(make_residual(3.0, 1.0, 0.0).passed(1e-8));
    const auto tiny = make_residual(1e-3, 0.0, 0.0);
    CHECK(tiny.scale == 1.0);
}

TEST_CASE("kernel derivative integral is rule independent") {
    QuadratureConfig gj;
    gj.rule = QuadRule::GaussJacobi;
    for (double alpha : {0.25, 1.0, 1.5}) {
        const double adaptive = kernel_derivative_integral(cat("exp"), 0.4, 0.0, alpha, kCfg).value;
        const double jacobi = kernel_derivative_integral(cat("exp"), 0.4, 0.0, alpha, gj).value;
        CHECK(adaptive == doctest::Approx(jacobi).epsilon(1e-10));
    }
}
