// Test-only oracles, independent of the library's own integration paths.
#pragma once

#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

#include "ccva/termstructures.hpp"

namespace ccva::testing {

/// Dense midpoint-rule integral of an arbitrary function. Deliberately
/// brute-force: no breakpoints, no adaptivity.
template <typename F>
double dense_midpoint(F&& f, double a, double b, std::size_t steps = 100000) {
    const double h = (b - a) / static_cast<double>(steps);
    double sum = 0.0;
    for (std::size_t k = 0; k < steps; ++k)
        sum += f(a + h * (static_cast<double>(k) + 0.5));
    return sum * h;
}

/// Dense trapezoid-rule integral; same spirit as dense_midpoint.
template <typename F>
double dense_trapezoid(F&& f, double a, double b, std::size_t steps = 100000) {
    const double h = (b - a) / static_cast<double>(steps);
    double sum = 0.5 * (f(a) + f(b));
    for (std::size_t k = 1; k < steps; ++k) sum += f(a + h * static_cast<double>(k));
    return sum * h;
}

/// Random hazard curve with strictly increasing node times in (0, 100) and
/// hazards in [0, max_hazard].
inline HazardCurve random_hazard_curve(std::mt19937& rng, double max_hazard = 0.5) {
    std::uniform_int_distribution<int> n_nodes(1, 8);
    std::uniform_real_distribution<double> time_gap(0.5, 20.0);
    std::uniform_real_distribution<double> level(0.0, max_hazard);

    const int n = n_nodes(rng);
    std::vector<HazardNode> nodes;
    double t = time_gap(rng);
    for (int i = 0; i < n; ++i) {
        nodes.push_back({t, level(rng)});
        t += time_gap(rng);
    }
    return HazardCurve(std::move(nodes));
}

}  // namespace ccva::testing
