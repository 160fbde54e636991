#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numbers>
#include <vector>

#include "hulthen/errors.hpp"

namespace hulthen::oracle {

struct QuadratureRule {
    std::vector<double> nodes;   // on (-1, 1)
    std::vector<double> weights;
};

/// Gauss-Legendre nodes/weights by Newton iteration on the Legendre
/// recurrence. Rules are cached per order; map nodes are stable, so the
/// returned reference survives later insertions and concurrent callers only
/// contend on the lock.
inline const QuadratureRule& gauss_legendre(int n) {
    static std::map<int, QuadratureRule> cache;
    static std::mutex cache_mutex;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Chebyshev-based initial guess
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return cache.emplace(n, std::move(rule)).first->second;
}

template <class F>
double gauss_legendre_integrate(const F& f, double a, double b, int order) {
    const QuadratureRule& rule = gauss_legendre(order);
    double mid = 0.5 * (a + b);
    double half = 0.5 * (b - a);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return acc * half;
}

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

/// Integrates f over [a, b] by Gauss-Legendre with order doubling until two
/// successive estimates agree to the requested tolerance. The integrand is
/// never evaluated at the endpoints, so integrable endpoint singularities of
/// algebraic order > -1 are tolerated (accuracy then depends on their
/// strength; regularize first when it matters).
template <class F>
QuadratureResult quadrature(const F& f, double a, double b, double tol = 1e-12) {
    int order = 64;
    double prev = gauss_legendre_integrate(f, a, b, order);
    double diff = HUGE_VAL;
    for (int step = 0; step < 9; ++step) {
        order *= 2;
        double cur = gauss_legendre_integrate(f, a, b, order);
        diff = std::abs(cur - prev);
        if (diff <= std::max(tol, 1e-15 * std::abs(cur)))
            return {cur, diff};
        prev = cur;
    }
    throw numerics_error(
        "quadrature: no convergence after refinement to order " +
            std::to_string(order) + " (last change " + std::to_string(diff) + ")",
        diff);
}

} // namespace hulthen::oracle
