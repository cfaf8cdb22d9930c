#pragma once

namespace fracineq::specfun {

/// Relative accuracy contract of the kernels below.
struct SpecFunAccuracy {
    double rel_tol = 1e-13;
};

inline constexpr SpecFunAccuracy kAccuracy{};

// All three throw DomainError for non-positive (or NaN) arguments; no
// reflection formula is provided.

/// Euler Gamma function for z > 0.
double gamma(double z);

/// Natural log of Gamma for z > 0, valid far beyond the overflow point of gamma().
double ln_gamma(double z);

/// Euler Beta function, exp(lnΓ(x) + lnΓ(y) − lnΓ(x+y)). Symmetric bit-for-bit.
double beta(double x, double y);

} // namespace fracineq::specfun
