#include "fracineq/identity.hpp"

#include "fracineq/errors.hpp"
#include "fracineq/specfun.hpp"

#include <algorithm>
#include <cmath>

namespace fracineq {

bool IdentityResidual::passed(double identity_tol) const {
    return rel_residual <= std::max(identity_tol, 10.0 * quad_error_budget);
}

IdentityResidual make_residual(double lhs, double rhs, double abs_error) {
    IdentityResidual r;
    r.lhs = lhs;
    r.rhs = rhs;
    r.residual = lhs - rhs;
    r.scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
    r.rel_residual = std::abs(r.residual) / r.scale;
    r.quad_error_budget = abs_error / r.scale;
    return r;
}

Estimate kernel_derivative_integral(const Function1D& f, double x, double end, double alpha,
                                    const QuadratureConfig& cfg) {
    auto fp = [&](double t) { return f.deriv(t * x + (1.0 - t) * end); };
    switch (cfg.rule) {
    case QuadRule::GaussJacobi:
        return quad::gauss_jacobi(fp, alpha, cfg);
    case QuadRule::OracleMidpoint:
        return quad::midpoint_estimate([&](double t) { return std::pow(t, alpha) * fp(t); }, 0.0, 1.0);
    case QuadRule::TransformedAdaptive:
        break;
    }
    return quad::adaptive([&](double t) { return std::pow(t, alpha) * fp(t); }, 0.0, 1.0, cfg);
}

namespace {

// Both halves of the identity with their pieces, shared by the checks below.
struct Halves {
    double left_value;  // (x−a)^α f(x)/(b−a) − Γ(α+1)/(b−a)·J_{x−}^α f(a)
    double left_kernel; // (x−a)^(α+1)/(b−a) ∫₀¹ t^α f′(tx+(1−t)a) dt
    double left_error;
    double right_value;  // −(b−x)^α f(x)/(b−a) + Γ(α+1)/(b−a)·J_{x+}^α f(b)
    double right_kernel; // (b−x)^(α+1)/(b−a) ∫₀¹ t^α f′(tx+(1−t)b) dt
    double right_error;
};

Halves evaluate_halves(const Function1D& f, const FracParams& prm, const QuadratureConfig& cfg) {
    prm.validate();
    const auto [j_left, j_right] = fracint::lemma_pair(f, prm, cfg);
    const double width = prm.b - prm.a;
    const double da = prm.x - prm.a;
    const double db = prm.b - prm.x;
    const double g = specfun::gamma(prm.alpha + 1.0);
    const double fx = f.eval(prm.x);

    Halves h{};
    const Estimate k_left = da > 0.0 ? kernel_derivative_integral(f, prm.x, prm.a, prm.alpha, cfg)
                                     : Estimate{};
    const Estimate k_right = db > 0.0 ? kernel_derivative_integral(f, prm.x, prm.b, prm.alpha, cfg)
                                      : Estimate{};
    const double pa = std::pow(da, prm.alpha + 1.0) / width;
    const double pb = std::pow(db, prm.alpha + 1.0) / width;

    h.left_value = std::pow(da, prm.alpha) * fx / width - g / width * j_left.value;
    h.left_kernel = pa * k_left.value;
    h.left_error = g / width * j_left.error + pa * k_left.error;
    h.right_value = -std::pow(db, prm.alpha) * fx / width + g / width * j_right.value;
    h.right_kernel = pb * k_right.value;
    h.right_error = g / width * j_right.error + pb * k_right.error;
    return h;
}

} // namespace

IdentityResidual check_e1(const Function1D& f, const FracParams& prm, const QuadratureConfig& cfg) {
    const Halves h = evaluate_halves(f, prm, cfg);
    return make_residual(h.left_value - h.right_value, h.left_kernel - h.right_kernel,
                         h.left_error + h.right_error);
}

std::pair<IdentityResidual, IdentityResidual> check_e4_e5(const Function1D& f, const FracParams& prm,
                                                          const QuadratureConfig& cfg) {
    const Halves h = evaluate_halves(f, prm, cfg);
    return {make_residual(h.left_value, h.left_kernel, h.left_error),
            make_residual(h.right_value, h.right_kernel, h.right_error)};
}

ClassicalLemmaResidual check_classical_lemma(const Function1D& f, double a, double b, double x,
                                             const QuadratureConfig& cfg) {
    FracParams prm;
    prm.a = a;
    prm.b = b;
    prm.x = x;
    prm.alpha = 1.0;
    prm.validate();
    if (a < f.domain_lo || b > f.domain_hi) {
        throw DomainError("check_classical_lemma: [a,b] leaves the domain of " + f.name);
    }

    const double width = b - a;
    QuadratureConfig plain = cfg;
    if (plain.rule == QuadRule::GaussJacobi) plain.rule = QuadRule::TransformedAdaptive;
    const Estimate mean_integral =
        plain.rule == QuadRule::OracleMidpoint
            ? quad::midpoint_estimate(f.eval, a, b)
            : quad::adaptive(f.eval, a, b, plain);
    const Estimate k_left = x > a ? kernel_derivative_integral(f, x, a, 1.0, cfg) : Estimate{};
    const Estimate k_right = x < b ? kernel_derivative_integral(f, x, b, 1.0, cfg) : Estimate{};

    const double lhs = f.eval(x) - mean_integral.value / width;
    const double rhs = (x - a) * (x - a) / width * k_left.value -
                       (b - x) * (b - x) / width * k_right.value;
    const double err = mean_integral.error / width + (x - a) * (x - a) / width * k_left.error +
                       (b - x) * (b - x) / width * k_right.error;

    ClassicalLemmaResidual out;
    static_cast<IdentityResidual&>(out) = make_residual(lhs, rhs, err);
    const IdentityResidual e1 = check_e1(f, prm, cfg);
    out.e1_deviation = std::max(std::abs(out.lhs - e1.lhs), std::abs(out.rhs - e1.rhs));
    return out;
}

} // namespace fracineq
