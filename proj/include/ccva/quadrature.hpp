#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace ccva::quad {

/// Composite trapezoid rule with a fixed number of uniform steps.
/// Brute-force grade; used mainly as an independent cross-check.
template <typename F>
double trapezoid(F&& f, double a, double b, std::size_t steps) {
    if (steps == 0) throw std::invalid_argument("trapezoid: steps must be > 0");
    if (a == b) return 0.0;
    const double h = (b - a) / static_cast<double>(steps);
    double sum = 0.5 * (f(a) + f(b));
    for (std::size_t k = 1; k < steps; ++k) sum += f(a + h * static_cast<double>(k));
    return sum * h;
}

/// Composite midpoint rule with a fixed number of uniform steps.
template <typename F>
double midpoint(F&& f, double a, double b, std::size_t steps) {
    if (steps == 0) throw std::invalid_argument("midpoint: steps must be > 0");
    if (a == b) return 0.0;
    const double h = (b - a) / static_cast<double>(steps);
    double sum = 0.0;
    for (std::size_t k = 0; k < steps; ++k) sum += f(a + h * (static_cast<double>(k) + 0.5));
    return sum * h;
}

/// Composite Simpson rule with an even number of uniform intervals.
template <typename F>
double simpson(F&& f, double a, double b, std::size_t intervals) {
    if (intervals == 0 || intervals % 2 != 0)
        throw std::invalid_argument("simpson: intervals must be even and > 0");
    if (a == b) return 0.0;
    const double h = (b - a) / static_cast<double>(intervals);
    double sum = f(a) + f(b);
    for (std::size_t k = 1; k < intervals; ++k) {
        const double x = a + h * static_cast<double>(k);
        sum += (k % 2 == 1 ? 4.0 : 2.0) * f(x);
    }
    return sum * h / 3.0;
}

/// Sorted, deduplicated partition of [a, b]: endpoints plus every
/// breakpoint strictly inside the interval.
std::vector<double> partition(double a, double b, std::span<const double> breakpoints);

namespace detail {

// Doubling Simpson on one cell until successive refinements agree.
template <typename F>
double integrate_cell(F&& f, double a, double b, double rel_tol, double abs_tol) {
    if (b <= a) return 0.0;
    double prev = simpson(f, a, b, 4);
    std::size_t intervals = 8;
    constexpr std::size_t kMaxIntervals = 1u << 20;
    while (intervals <= kMaxIntervals) {
        const double cur = simpson(f, a, b, intervals);
        if (std::abs(cur - prev) <= std::max(rel_tol * std::abs(cur), abs_tol)) return cur;
        prev = cur;
        intervals *= 2;
    }
    return prev;
}

}  // namespace detail

/// Adaptive composite quadrature on the partition induced by `breakpoints`.
///
/// Each cell is refined (interval-doubling Simpson) until successive
/// refinements agree to `rel_tol`, with an absolute floor scaled from a
/// coarse first pass so that near-zero cells cannot stall convergence.
/// Intended for integrands that are smooth between breakpoints and kinked
/// only at them.
template <typename F>
double integrate(F&& f, double a, double b, std::span<const double> breakpoints,
                 double rel_tol = 1e-9) {
    if (b < a) throw std::invalid_argument("integrate: b must be >= a");
    if (a == b) return 0.0;
    const std::vector<double> pts = partition(a, b, breakpoints);

    double coarse = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) coarse += simpson(f, pts[i], pts[i + 1], 8);
    const double abs_tol =
        std::max(1e-300, rel_tol * std::abs(coarse) / static_cast<double>(pts.size()));

    double total = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        total += detail::integrate_cell(f, pts[i], pts[i + 1], rel_tol, abs_tol);
    return total;
}

}  // namespace ccva::quad
