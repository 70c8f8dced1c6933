#include "ccva/quadrature.hpp"

namespace ccva::quad {

std::vector<double> partition(double a, double b, std::span<const double> breakpoints) {
    std::vector<double> pts;
    pts.reserve(breakpoints.size() + 2);
    pts.push_back(a);
    for (double x : breakpoints)
        if (x > a && x < b) pts.push_back(x);
    pts.push_back(b);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

}  // namespace ccva::quad
