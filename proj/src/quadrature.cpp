#include "fracineq/quadrature.hpp"

#include "fracineq/errors.hpp"

#include <Eigen/Eigenvalues>

#include <omp.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

namespace fracineq {

int worker_threads() {
    if (const char* env = std::getenv("FRACINEQ_THREADS")) {
        char* end = nullptr;
        const long n = std::strtol(env, &end, 10);
        if (end != env && n > 0) {
            return static_cast<int>(n);
        }
    }
    return omp_get_max_threads();
}

std::string_view to_string(QuadRule rule) {
    switch (rule) {
    case QuadRule::TransformedAdaptive: return "transformed-adaptive";
    case QuadRule::GaussJacobi: return "gauss-jacobi";
    case QuadRule::OracleMidpoint: return "oracle-midpoint";
    }
    return "unknown";
}

std::optional<QuadRule> parse_quad_rule(std::string_view name) {
    for (auto r : {QuadRule::TransformedAdaptive, QuadRule::GaussJacobi, QuadRule::OracleMidpoint}) {
        if (to_string(r) == name) return r;
    }
    return std::nullopt;
}

void QuadratureConfig::validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) {
        throw ConfigError("quadrature: rel_tol and abs_tol must be > 0");
    }
    if (max_subdivisions < 8) {
        throw ConfigError("quadrature: max_subdivisions must be >= 8");
    }
}

namespace quad {

namespace {

// QUADPACK qk21 abscissae and weights. Even indices of kXgk (1,3,...,9) are
// the 10-point Gauss nodes.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000,
};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208980684813, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
};
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
};

struct Panel {
    double lo;
    double hi;
    double value;
    double error;
};

constexpr long kMidpointBlocks = 1000;

} // namespace

Estimate gauss_kronrod21(const RealFn& f, double lo, double hi) {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const double fc = f(center);
    double kronrod = kWgk[10] * fc;
    double gauss = 0.0;
    for (std::size_t j = 0; j < 10; ++j) {
        const double dx = half * kXgk[j];
        const double pair = f(center - dx) + f(center + dx);
        kronrod += kWgk[j] * pair;
        if (j % 2 == 1) gauss += kWg[j / 2] * pair;
    }
    return {kronrod * half, std::abs((kronrod - gauss) * half)};
}

Estimate adaptive(const RealFn& f, double lo, double hi, const QuadratureConfig& cfg) {
    cfg.validate();
    if (lo == hi) return {0.0, 0.0};

    auto by_error = [](const Panel& l, const Panel& r) { return l.error < r.error; };
    std::vector<Panel> heap;
    heap.reserve(static_cast<std::size_t>(cfg.max_subdivisions) + 1);
    {
        const Estimate e = gauss_kronrod21(f, lo, hi);
        heap.push_back({lo, hi, e.value, e.error});
    }
    double total = heap.front().value;
    double total_error = heap.front().error;
    const double min_width = 64.0 * std::numeric_limits<double>::epsilon() * std::abs(hi - lo);

    auto converged = [&] {
        return total_error <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total));
    };
    while (!converged()) {
        if (static_cast<int>(heap.size()) >= cfg.max_subdivisions) break;
        std::pop_heap(heap.begin(), heap.end(), by_error);
        const Panel worst = heap.back();
        heap.pop_back();
        if (std::abs(worst.hi - worst.lo) < min_width) {
            heap.push_back(worst);
            std::push_heap(heap.begin(), heap.end(), by_error);
            break;
        }
        const double mid = 0.5 * (worst.lo + worst.hi);
        const Estimate left = gauss_kronrod21(f, worst.lo, mid);
        const Estimate right = gauss_kronrod21(f, mid, worst.hi);
        total += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        heap.push_back({worst.lo, mid, left.value, left.error});
        std::push_heap(heap.begin(), heap.end(), by_error);
        heap.push_back({mid, worst.hi, right.value, right.error});
        std::push_heap(heap.begin(), heap.end(), by_error);
    }

    // Re-sum in interval order; the running totals above drift with rounding.
    std::sort(heap.begin(), heap.end(), [](const Panel& l, const Panel& r) { return l.lo < r.lo; });
    total = 0.0;
    total_error = 0.0;
    for (const Panel& p : heap) {
        total += p.value;
        total_error += p.error;
    }
    if (!converged()) {
        throw ConvergenceError("adaptive quadrature did not converge on [" + std::to_string(lo) +
                                   ", " + std::to_string(hi) + "] after " +
                                   std::to_string(heap.size()) + " panels",
                               total, total_error);
    }
    return {total, total_error};
}

JacobiRule gauss_jacobi_rule(int n, double exponent) {
    if (n < 1) throw DomainError("gauss_jacobi_rule: n must be >= 1");
    if (!(exponent > -1.0)) throw DomainError("gauss_jacobi_rule: exponent must be > -1");

    // Monic recurrence for the Jacobi weight (1+x)^b on [-1,1], mapped to
    // [0,1] via y = (1+x)/2, then Golub–Welsch.
    const double b = exponent;
    Eigen::VectorXd diag(n);
    Eigen::VectorXd sub(std::max(n - 1, 1));
    for (int k = 0; k < n; ++k) {
        const double m = 2.0 * k + b;
        const double alpha_k = (k == 0) ? b / (b + 2.0) : b * b / (m * (m + 2.0));
        diag(k) = 0.5 * (1.0 + alpha_k);
        if (k + 1 < n) {
            const int j = k + 1;
            const double mj = 2.0 * j + b;
            const double beta_j = (j == 1)
                                      ? 4.0 * (1.0 + b) / ((2.0 + b) * (2.0 + b) * (3.0 + b))
                                      : 4.0 * j * j * (j + b) * (j + b) / (mj * mj * (mj * mj - 1.0));
            sub(k) = 0.5 * std::sqrt(beta_j);
        }
    }
    JacobiRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    const double mu0 = 1.0 / (b + 1.0);
    if (n == 1) {
        rule.nodes[0] = diag(0);
        rule.weights[0] = mu0;
        return rule;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub.head(n - 1), Eigen::ComputeEigenvectors);
    for (int k = 0; k < n; ++k) {
        const double v0 = solver.eigenvectors()(0, k);
        rule.nodes[static_cast<std::size_t>(k)] = solver.eigenvalues()(k);
        rule.weights[static_cast<std::size_t>(k)] = mu0 * v0 * v0;
    }
    return rule;
}

Estimate gauss_jacobi(const RealFn& g, double exponent, const QuadratureConfig& cfg) {
    cfg.validate();
    auto apply = [&](int n) {
        const JacobiRule rule = gauss_jacobi_rule(n, exponent);
        double sum = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * g(rule.nodes[i]);
        return sum;
    };
    constexpr int kMaxNodes = 512;
    double previous = apply(16);
    for (int n = 32; n <= kMaxNodes; n *= 2) {
        const double current = apply(n);
        const double err = std::abs(current - previous);
        if (err <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(current))) return {current, err};
        previous = current;
        if (n == kMaxNodes) {
            throw ConvergenceError("gauss-jacobi did not converge with 512 nodes", current, err);
        }
    }
    return {previous, 0.0};
}

double midpoint(const RealFn& f, double lo, double hi, long panels, Execution exec) {
    if (panels < 1) throw DomainError("midpoint: panels must be >= 1");
    const double h = (hi - lo) / static_cast<double>(panels);
    const long blocks = std::min(panels, kMidpointBlocks);
    std::vector<double> partial(static_cast<std::size_t>(blocks), 0.0);
    auto block_sum = [&](long blk) {
        const long first = blk * panels / blocks;
        const long last = (blk + 1) * panels / blocks;
        double s = 0.0;
        for (long i = first; i < last; ++i) s += f(lo + (static_cast<double>(i) + 0.5) * h);
        return s;
    };
    if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(static) num_threads(worker_threads())
        for (long blk = 0; blk < blocks; ++blk) partial[static_cast<std::size_t>(blk)] = block_sum(blk);
    } else {
        for (long blk = 0; blk < blocks; ++blk) partial[static_cast<std::size_t>(blk)] = block_sum(blk);
    }
    double total = 0.0;
    for (double s : partial) total += s;
    return total * h;
}

Estimate midpoint_estimate(const RealFn& f, double lo, double hi, long panels, Execution exec) {
    const double fine = midpoint(f, lo, hi, panels, exec);
    const double coarse = midpoint(f, lo, hi, std::max(1L, panels / 2), exec);
    return {fine, std::abs(fine - coarse) / 3.0};
}

} // namespace quad
} // namespace fracineq
