#pragma once

#include <optional>

#include "ccva/termstructures.hpp"

namespace ccva {

/// Parameters of the piecewise-linear stress path used for the
/// physical-measure hazard segment beyond the last traded CDS maturity.
///
/// The path starts at (t_start, h_start), ramps through a middle section of
/// width `width` centred on `mid`, and either approaches (t_end, h_max)
/// (endpoint variant) or peaks at (mid, h_max) and returns to h_start by
/// t_end (transient variant). `buildup` (u) is the fraction of the total
/// impact h_max - h_start assigned to the initial build-up and to the final
/// approach.
///
/// h_start left unset means "use the flat hazard bootstrapped from the
/// traded CDS quote"; it is resolved by the curve-extension layer.
struct SigmoidParams {
    bool transient = false;
    double t_start = 10.0;
    std::optional<double> h_start;  // rate/yr; unset = bootstrap default
    double mid = 40.0;              // years to mid-impact
    double width = 20.0;            // years, width of the middle section
    double buildup = 0.10;          // u, fraction in [0, 0.5)
    double t_end = 80.0;
    double h_max = 0.25;            // rate/yr at the stress peak/endpoint

    /// Strict validation; throws std::invalid_argument on the first
    /// violated constraint. Scenario grids must fail loudly on malformed
    /// parameters rather than clamp.
    void validate() const;

    /// Copy with h_start filled from `fallback` when unset.
    SigmoidParams resolved(double fallback_h_start) const;
};

/// Build the endpoint-variant stress curve.
///
/// Control points: (t_start, h_start), (mid - w/2, h_start + u*impact),
/// (mid + w/2, h_max - u*impact), (t_end, h_max). If the slope of the final
/// section exceeds the slope of the middle section, the third point is
/// removed and the curve runs straight from the second point to the end.
/// Degenerate boundary sections (middle section touching t_start or t_end)
/// become jump nodes.
HazardCurve build_endpoint_curve(const SigmoidParams& params);

/// Build the transient-variant stress curve: symmetric rise and fall about
/// `mid`, peaking at (mid, h_max), shoulders at h_start + u*impact, and a
/// return to (t_end, h_start).
///
/// width == 0 is a pure spike: it carries no hazard mass, so the realized
/// curve is the tent through the shoulder level with the peak dropped.
HazardCurve build_transient_curve(const SigmoidParams& params);

/// Straight hazard ramp (t_start, h_start) -> (t_end, h_max), flat at h_max
/// afterwards: the slowest uniform approach to a stress endpoint.
HazardCurve slowest_uniform_curve(double t_start, double h_start, double t_end,
                                  double h_max);

}  // namespace ccva
