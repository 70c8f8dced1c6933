#pragma once

#include <vector>

namespace ccva {

/// Deterministic discount curve from a flat continuously-compounded rate.
/// Times are real-valued years from the as-of date (ACT/365-style year
/// fractions); no calendar machinery.
class DiscountCurve {
public:
    explicit DiscountCurve(double flat_rate);

    double rate() const { return rate_; }

    /// D(t) = exp(-rate * t). D(0) = 1; non-increasing for rate >= 0.
    double discount(double t) const;

private:
    double rate_;
};

struct HazardNode {
    double time;    // years
    double hazard;  // instantaneous rate per year
};

/// Piecewise-linear instantaneous hazard rate lambda(t).
///
/// lambda interpolates linearly between nodes and extrapolates flat before
/// the first node and after the last. Node times are non-decreasing; a
/// repeated time encodes a jump (left value first, then right value), as at
/// the switch from the traded-CDS segment to a stressed segment. At a jump,
/// queries return the right limit.
///
/// The cumulative hazard is the exact trapezoid integral of the linear
/// segments, so survival probabilities carry no quadrature error.
class HazardCurve {
public:
    explicit HazardCurve(std::vector<HazardNode> nodes);

    static HazardCurve flat(double hazard);

    /// lambda(t); right-continuous at jump nodes.
    double hazard_at(double t) const;

    /// Lambda(t) = integral of lambda over [0, t], exact.
    double cumulative_hazard(double t) const;

    /// S(t) = exp(-Lambda(t)). S(0) = 1, non-increasing, in (0, 1].
    double survival(double t) const;

    const std::vector<HazardNode>& nodes() const { return nodes_; }

private:
    std::vector<HazardNode> nodes_;
    std::vector<double> cumulative_;  // Lambda at each node time
};

/// Lightweight view over a hazard curve exposing the survival function and
/// the default density lambda(t) * S(t).
class SurvivalFn {
public:
    explicit SurvivalFn(const HazardCurve& curve) : curve_(&curve) {}

    double operator()(double t) const { return curve_->survival(t); }
    double default_density(double t) const {
        return curve_->hazard_at(t) * curve_->survival(t);
    }

private:
    const HazardCurve* curve_;
};

}  // namespace ccva
