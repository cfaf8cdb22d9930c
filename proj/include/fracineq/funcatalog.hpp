#pragma once

#include "fracineq/execution.hpp"
#include "fracineq/quadrature.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fracineq {

/// A differentiable test function with its exact derivative.
///
/// `deriv_sup`, when set, returns an analytic upper bound for |f′| on a
/// subinterval [lo, hi] of the domain (the registered analytic M).
struct Function1D {
    std::string name;
    RealFn eval;
    RealFn deriv;
    double domain_lo = 0.0;
    double domain_hi = 1.0;
    std::function<double(double, double)> deriv_sup;

    /// Same function with its domain narrowed to [lo, hi]; throws DomainError
    /// unless domain_lo <= lo < hi <= domain_hi.
    Function1D restricted(double lo, double hi) const;

    bool contains(double t) const { return t >= domain_lo && t <= domain_hi; }
};

/// c1·f + c2·g on the intersection of the two domains. No analytic bound is carried over.
Function1D linear_combination(double c1, const Function1D& f, double c2, const Function1D& g);

enum class ConvexityMode { SConvex, SConcave };
enum class CertTarget { Value, AbsDeriv, AbsDerivPow };

std::string_view to_string(ConvexityMode mode);
std::string_view to_string(CertTarget target);

struct CertifyOptions {
    int grid_size = 33;
    double cert_tol = 1e-9;
    Execution exec = Execution::Parallel;
};

struct ConvexityCertificate {
    double s = 1.0;
    ConvexityMode mode = ConvexityMode::SConvex;
    CertTarget target = CertTarget::AbsDeriv;
    double q = 1.0;
    double max_violation = 0.0;
    int grid_size = 0;
    double cert_tol = 1e-9;

    bool passed() const { return max_violation <= cert_tol; }
    /// The same sample set judged against a different tolerance.
    bool passes_at(double tol) const { return max_violation <= tol; }
};

/// Samples g(λu+(1−λ)v) − λ^s g(u) − (1−λ)^s g(v) (negated for s-concave)
/// over a uniform grid_size³ grid of [lo,hi]² × [0,1], where g is f, |f′| or
/// |f′|^q. The domain must lie in [0, ∞).
ConvexityCertificate certify(const Function1D& f, double s, double q, ConvexityMode mode,
                             CertTarget target, const CertifyOptions& opts = {});

struct DerivBound {
    enum class Method { Analytic, Sampled };
    double M = 0.0;
    Method method = Method::Sampled;
};

/// Analytic bound when registered, otherwise (1 + 1e-9)·max |f′| over 1001 grid points.
DerivBound derivative_bound(const Function1D& f);

/// An s value together with the q exponents (for target |f′|^q) at which the
/// hypothesis is registered.
struct CatalogEntry {
    Function1D function;
    std::vector<double> s_convex;  // |f′| is s-convex for these s
    std::vector<double> s_concave; // |f′|^q is s-concave for these s (for q in concave_q)
    std::vector<double> concave_q;
    std::optional<double> analytic_M; // over the full domain
    std::string description;
};

const std::vector<CatalogEntry>& builtin_catalog();

/// Throws ConfigError listing the known names when `name` is not in the catalog.
const CatalogEntry& catalog_entry(std::string_view name);

} // namespace fracineq
