#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "unwinding/errors.hpp"

namespace unwinding {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr int kQuadratureStart = 64;
inline constexpr int kQuadratureCap = 1 << 20;

/// Trapezoid rule for a 2*pi-periodic integrand on N uniform angles.
template <class F>
double periodic_trapezoid(F&& f, int n) {
    const double step = kTwoPi / n;
    double sum = 0.0;
    for (int j = 0; j < n; ++j) sum += f(step * j);
    return sum * step;
}

/// Doubling trapezoid: N doubles (reusing prior samples) until successive
/// values agree to rel_tol, with abs_floor as an absolute escape for
/// integrals that are numerically zero. Throws QuadratureNonConvergence at
/// the point cap.
template <class F>
double adaptive_periodic_trapezoid(F&& f, double rel_tol, double abs_floor,
                                   int n0 = kQuadratureStart,
                                   int cap = kQuadratureCap) {
    int n = n0;
    double sum = 0.0;
    for (int j = 0; j < n; ++j) sum += f(kTwoPi * j / n);
    double prev = sum * (kTwoPi / n);
    while (n < cap) {
        const int doubled = 2 * n;
        const double step = kTwoPi / doubled;
        for (int j = 0; j < n; ++j) sum += f(step * (2 * j + 1));
        n = doubled;
        const double cur = sum * step;
        if (std::abs(cur - prev) <= rel_tol * std::abs(cur) + abs_floor) return cur;
        prev = cur;
    }
    throw QuadratureNonConvergence("periodic quadrature did not settle below the point cap");
}

}  // namespace unwinding
