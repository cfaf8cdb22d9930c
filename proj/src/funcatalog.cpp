#include "fracineq/funcatalog.hpp"

#include "fracineq/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace fracineq {

Function1D Function1D::restricted(double lo, double hi) const {
    if (!(lo < hi) || lo < domain_lo || hi > domain_hi) {
        std::ostringstream msg;
        msg << name << ": [" << lo << ", " << hi << "] is not a subinterval of [" << domain_lo
            << ", " << domain_hi << "]";
        throw DomainError(msg.str());
    }
    Function1D out = *this;
    out.domain_lo = lo;
    out.domain_hi = hi;
    return out;
}

Function1D linear_combination(double c1, const Function1D& f, double c2, const Function1D& g) {
    Function1D out;
    out.name = "lincomb(" + f.name + "," + g.name + ")";
    out.eval = [=, fe = f.eval, ge = g.eval](double t) { return c1 * fe(t) + c2 * ge(t); };
    out.deriv = [=, fd = f.deriv, gd = g.deriv](double t) { return c1 * fd(t) + c2 * gd(t); };
    out.domain_lo = std::max(f.domain_lo, g.domain_lo);
    out.domain_hi = std::min(f.domain_hi, g.domain_hi);
    if (!(out.domain_lo < out.domain_hi)) {
        throw DomainError("linear_combination: domains of " + f.name + " and " + g.name +
                          " do not overlap");
    }
    return out;
}

std::string_view to_string(ConvexityMode mode) {
    return mode == ConvexityMode::SConvex ? "s-convex" : "s-concave";
}

std::string_view to_string(CertTarget target) {
    switch (target) {
    case CertTarget::Value: return "f";
    case CertTarget::AbsDeriv: return "|f'|";
    case CertTarget::AbsDerivPow: return "|f'|^q";
    }
    return "unknown";
}

ConvexityCertificate certify(const Function1D& f, double s, double q, ConvexityMode mode,
                             CertTarget target, const CertifyOptions& opts) {
    if (!(s > 0.0 && s <= 1.0)) throw DomainError("certify: s must lie in (0, 1]");
    if (!(q >= 1.0)) throw DomainError("certify: q must be >= 1");
    if (opts.grid_size < 33) throw ConfigError("certify: grid_size must be >= 33");
    if (f.domain_lo < 0.0) {
        throw DomainError("certify: " + f.name +
                          " has a domain reaching below 0; s-convexity is defined on [0, inf)");
    }

    RealFn g;
    switch (target) {
    case CertTarget::Value: g = f.eval; break;
    case CertTarget::AbsDeriv: g = [d = f.deriv](double t) { return std::abs(d(t)); }; break;
    case CertTarget::AbsDerivPow:
        g = [d = f.deriv, q](double t) { return std::pow(std::abs(d(t)), q); };
        break;
    }

    const int n = opts.grid_size;
    const double lo = f.domain_lo;
    const double step = (f.domain_hi - lo) / (n - 1);
    const double sign = mode == ConvexityMode::SConvex ? 1.0 : -1.0;
    std::vector<double> nodes(static_cast<std::size_t>(n));
    std::vector<double> g_nodes(static_cast<std::size_t>(n));
    std::vector<double> lambda(static_cast<std::size_t>(n));
    std::vector<double> w_left(static_cast<std::size_t>(n));
    std::vector<double> w_right(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        nodes[k] = (i == n - 1) ? f.domain_hi : lo + i * step;
        g_nodes[k] = g(nodes[k]);
        lambda[k] = static_cast<double>(i) / (n - 1);
        w_left[k] = std::pow(lambda[k], s);
        w_right[k] = std::pow(1.0 - lambda[k], s);
    }

    auto row_violation = [&](int iu) {
        const auto u = static_cast<std::size_t>(iu);
        double worst = -std::numeric_limits<double>::infinity();
        for (std::size_t v = 0; v < nodes.size(); ++v) {
            for (std::size_t l = 0; l < lambda.size(); ++l) {
                const double mixed = lambda[l] * nodes[u] + (1.0 - lambda[l]) * nodes[v];
                const double gap = g(mixed) - w_left[l] * g_nodes[u] - w_right[l] * g_nodes[v];
                worst = std::max(worst, sign * gap);
            }
        }
        return worst;
    };

    double worst = -std::numeric_limits<double>::infinity();
    if (opts.exec == Execution::Parallel) {
#pragma omp parallel for schedule(static) reduction(max : worst) num_threads(worker_threads())
        for (int iu = 0; iu < n; ++iu) worst = std::max(worst, row_violation(iu));
    } else {
        for (int iu = 0; iu < n; ++iu) worst = std::max(worst, row_violation(iu));
    }

    ConvexityCertificate cert;
    cert.s = s;
    cert.mode = mode;
    cert.target = target;
    cert.q = q;
    cert.max_violation = worst;
    cert.grid_size = n;
    cert.cert_tol = opts.cert_tol;
    return cert;
}

DerivBound derivative_bound(const Function1D& f) {
    if (f.deriv_sup) return {f.deriv_sup(f.domain_lo, f.domain_hi), DerivBound::Method::Analytic};
    constexpr int kPoints = 1001;
    double sup = 0.0;
    for (int i = 0; i < kPoints; ++i) {
        const double t = (i == kPoints - 1)
                             ? f.domain_hi
                             : f.domain_lo + i * (f.domain_hi - f.domain_lo) / (kPoints - 1);
        sup = std::max(sup, std::abs(f.deriv(t)));
    }
    return {(1.0 + 1e-9) * sup, DerivBound::Method::Sampled};
}

namespace {

Function1D make(std::string name, RealFn eval, RealFn deriv, double lo, double hi,
                std::function<double(double, double)> sup) {
    return Function1D{std::move(name), std::move(eval), std::move(deriv), lo, hi, std::move(sup)};
}

const std::vector<double> kAllS = {0.25, 0.5, 0.75, 1.0};

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> out;

    out.push_back({make("constant", [](double) { return 1.0; }, [](double) { return 0.0; }, -2.0,
                        2.0, [](double, double) { return 0.0; }),
                   kAllS, kAllS, {1.5, 2.0, 5.0}, 0.0, "f(t) = 1"});
    out.push_back({make("linear", [](double t) { return t; }, [](double) { return 1.0; }, -2.0,
                        2.0, [](double, double) { return 1.0; }),
                   kAllS, {1.0}, {1.5, 2.0, 5.0}, 1.0, "f(t) = t"});
    out.push_back({make("affine", [](double t) { return 1.0 + 2.0 * t; },
                        [](double) { return 2.0; }, -2.0, 2.0, [](double, double) { return 2.0; }),
                   kAllS, {1.0}, {1.5, 2.0, 5.0}, 2.0, "f(t) = 1 + 2t"});
    out.push_back({make("square", [](double t) { return t * t; }, [](double t) { return 2.0 * t; },
                        0.0, 1.0,
                        [](double lo, double hi) { return 2.0 * std::max(std::abs(lo), std::abs(hi)); }),
                   kAllS, {}, {}, 2.0, "f(t) = t^2"});

    struct PowerSpec {
        const char* name;
        double s0;
        std::vector<double> s_convex;
        std::vector<double> concave_q;
        const char* description;
    };
    const PowerSpec powers[] = {
        {"power_1_25", 0.25, {0.25}, {1.5, 2.0}, "f(t) = t^1.25"},
        {"power_1_5", 0.5, {0.25, 0.5}, {1.5, 2.0}, "f(t) = t^1.5"},
        {"power_1_75", 0.75, {0.25, 0.5, 0.75}, {}, "f(t) = t^1.75"},
    };
    for (const auto& p : powers) {
        const double e = 1.0 + p.s0;
        std::vector<double> s_concave;
        if (!p.concave_q.empty()) s_concave = {1.0};
        out.push_back({make(
                           p.name, [e](double t) { return std::pow(t, e); },
                           [e](double t) { return e * std::pow(t, e - 1.0); }, 0.0, 1.0,
                           [e](double, double hi) { return e * std::pow(hi, e - 1.0); }),
                       p.s_convex, s_concave, p.concave_q, e, p.description});
    }

    out.push_back({make(
                       "three_halves", [](double t) { return 2.0 / 3.0 * t * std::sqrt(t); },
                       [](double t) { return std::sqrt(t); }, 0.0, 1.0,
                       [](double, double hi) { return std::sqrt(hi); }),
                   {0.25, 0.5}, {1.0}, {1.5, 2.0}, 1.0, "f(t) = (2/3) t^(3/2)"});
    out.push_back({make("exp", [](double t) { return std::exp(t); },
                        [](double t) { return std::exp(t); }, 0.0, 1.0,
                        [](double, double hi) { return std::exp(hi); }),
                   kAllS, {}, {}, std::exp(1.0), "f(t) = e^t"});
    // sup|cos| on a subinterval of [-2, 2]: 1 if it contains 0, otherwise an endpoint value
    // (cos is monotone on each side of 0 there).
    out.push_back({make("sine", [](double t) { return std::sin(t); },
                        [](double t) { return std::cos(t); }, -2.0, 2.0,
                        [](double lo, double hi) {
                            if (lo <= 0.0 && hi >= 0.0) return 1.0;
                            return std::max(std::abs(std::cos(lo)), std::abs(std::cos(hi)));
                        }),
                   {0.25, 0.5}, {}, {}, 1.0, "f(t) = sin t"});
    return out;
}

} // namespace

const std::vector<CatalogEntry>& builtin_catalog() {
    static const std::vector<CatalogEntry> catalog = build_catalog();
    return catalog;
}

const CatalogEntry& catalog_entry(std::string_view name) {
    for (const auto& e : builtin_catalog()) {
        if (e.function.name == name) return e;
    }
    std::string known;
    for (const auto& e : builtin_catalog()) known += (known.empty() ? "" : ", ") + e.function.name;
    throw ConfigError("unknown function '" + std::string(name) + "' (known: " + known + ")");
}

} // namespace fracineq
