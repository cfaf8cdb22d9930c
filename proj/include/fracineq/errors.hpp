#pragma once

#include <stdexcept>
#include <string>

namespace fracineq {

/// Argument outside the mathematical domain of an operation (caller bug).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Invalid configuration or parameter tuple.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A theorem was asked to produce its bound without its hypothesis being certified.
class HypothesisError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Quadrature ran out of subdivisions before meeting its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double best_estimate, double error_bound)
        : std::runtime_error(what), best_estimate_(best_estimate), error_bound_(error_bound) {}

    double best_estimate() const noexcept { return best_estimate_; }
    double error_bound() const noexcept { return error_bound_; }

private:
    double best_estimate_;
    double error_bound_;
};

} // namespace fracineq
