#include "fracineq/fracint.hpp"

#include "fracineq/errors.hpp"
#include "fracineq/specfun.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace fracineq {

void FracParams::validate() const {
    std::ostringstream bad;
    if (!(a < b)) bad << " a<b";
    if (!(x >= a && x <= b)) bad << " x in [a,b]";
    if (!(alpha > 0.0) || !std::isfinite(alpha)) bad << " alpha>0";
    if (!(s > 0.0 && s <= 1.0)) bad << " s in (0,1]";
    if (p && !(*p > 1.0)) bad << " p>1";
    if (q && !(*q >= 1.0)) bad << " q>=1";
    if (M && !(*M >= 0.0)) bad << " M>=0";
    if (p && q && std::abs(1.0 / *p + 1.0 / *q - 1.0) > 1e-12) bad << " 1/p+1/q=1";
    if (!bad.str().empty()) throw ConfigError("invalid parameters, violated:" + bad.str());
}

double conjugate_exponent(double p) {
    if (p == 1.0) return std::numeric_limits<double>::infinity();
    return p / (p - 1.0);
}

namespace fracint {

namespace {

void require_alpha(double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("fractional order must be > 0");
}

void require_in_domain(const Function1D& f, double lo, double hi) {
    if (lo < f.domain_lo || hi > f.domain_hi) {
        std::ostringstream msg;
        msg << f.name << ": interval [" << lo << ", " << hi << "] leaves the domain ["
            << f.domain_lo << ", " << f.domain_hi << "]";
        throw DomainError(msg.str());
    }
}

} // namespace

Estimate endpoint_singular(const Function1D& f, double c, double other, double alpha,
                           const QuadratureConfig& cfg) {
    require_alpha(alpha);
    const double length = std::abs(other - c);
    if (length == 0.0) return {0.0, 0.0};
    const double dir = other > c ? 1.0 : -1.0;
    const double inv_alpha = 1.0 / alpha;

    Estimate unit;
    switch (cfg.rule) {
    case QuadRule::TransformedAdaptive: {
        auto g = [&](double u) { return f.eval(c + dir * length * std::pow(u, inv_alpha)); };
        unit = quad::adaptive(g, 0.0, 1.0, cfg);
        break;
    }
    case QuadRule::GaussJacobi: {
        // ∫₀¹ y^(α−1) f(c ± L y) dy, rescaled below to the transformed normalisation.
        auto g = [&](double y) { return f.eval(c + dir * length * y); };
        unit = quad::gauss_jacobi(g, alpha - 1.0, cfg);
        unit.value *= alpha;
        unit.error *= alpha;
        break;
    }
    case QuadRule::OracleMidpoint:
        return oracle(f, c, other, alpha);
    }
    const double scale = std::pow(length, alpha) / specfun::gamma(alpha + 1.0);
    return {scale * unit.value, scale * unit.error};
}

Estimate rl_left(const Function1D& f, double a, double x, double alpha, const QuadratureConfig& cfg) {
    if (!(x > a)) throw DomainError("rl_left: empty interval, need a < x");
    require_in_domain(f, a, x);
    return endpoint_singular(f, x, a, alpha, cfg);
}

Estimate rl_right(const Function1D& f, double x, double b, double alpha, const QuadratureConfig& cfg) {
    if (!(b > x)) throw DomainError("rl_right: empty interval, need x < b");
    require_in_domain(f, x, b);
    return endpoint_singular(f, x, b, alpha, cfg);
}

std::pair<Estimate, Estimate> lemma_pair(const Function1D& f, const FracParams& prm,
                                         const QuadratureConfig& cfg) {
    prm.validate();
    require_in_domain(f, prm.a, prm.b);
    const Estimate first = prm.x == prm.a ? Estimate{} : endpoint_singular(f, prm.a, prm.x, prm.alpha, cfg);
    const Estimate second = prm.x == prm.b ? Estimate{} : endpoint_singular(f, prm.b, prm.x, prm.alpha, cfg);
    return {first, second};
}

Estimate oracle(const Function1D& f, double c, double other, double alpha, long panels,
                Execution exec) {
    require_alpha(alpha);
    const double length = std::abs(other - c);
    if (length == 0.0) return {0.0, 0.0};
    const double dir = other > c ? 1.0 : -1.0;
    const double inv_alpha = 1.0 / alpha;
    auto g = [&](double u) { return f.eval(c + dir * length * std::pow(u, inv_alpha)); };
    const Estimate unit = quad::midpoint_estimate(g, 0.0, 1.0, panels, exec);
    const double scale = std::pow(length, alpha) / specfun::gamma(alpha + 1.0);
    return {scale * unit.value, scale * unit.error};
}

} // namespace fracint
} // namespace fracineq
