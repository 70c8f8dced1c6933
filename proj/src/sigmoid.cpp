#include "ccva/sigmoid.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace ccva {

namespace {

// Skip exact duplicates; a repeated time with a new value forms a jump.
void append_node(std::vector<HazardNode>& nodes, double t, double h) {
    if (!nodes.empty() && nodes.back().time == t && nodes.back().hazard == h) return;
    nodes.push_back({t, h});
}

double section_slope(const HazardNode& a, const HazardNode& b) {
    if (b.time == a.time)
        return b.hazard > a.hazard ? std::numeric_limits<double>::infinity()
                                   : -std::numeric_limits<double>::infinity();
    return (b.hazard - a.hazard) / (b.time - a.time);
}

}  // namespace

void SigmoidParams::validate() const {
    if (!std::isfinite(t_start) || !std::isfinite(mid) || !std::isfinite(width) ||
        !std::isfinite(buildup) || !std::isfinite(t_end) || !std::isfinite(h_max))
        throw std::invalid_argument("SigmoidParams: non-finite parameter");
    if (t_start < 0.0) throw std::invalid_argument("SigmoidParams: t_start must be >= 0");
    if (t_end <= t_start)
        throw std::invalid_argument("SigmoidParams: t_end must exceed t_start");
    if (width < 0.0) throw std::invalid_argument("SigmoidParams: width must be >= 0");
    if (buildup < 0.0 || buildup >= 0.5)
        throw std::invalid_argument("SigmoidParams: buildup fraction must be in [0, 0.5)");
    if (h_max < 0.0) throw std::invalid_argument("SigmoidParams: h_max must be >= 0");
    if (h_start) {
        if (!std::isfinite(*h_start) || *h_start < 0.0)
            throw std::invalid_argument("SigmoidParams: h_start must be >= 0");
        if (*h_start > h_max)
            throw std::invalid_argument("SigmoidParams: h_start must not exceed h_max");
    }
    const double lo = mid - 0.5 * width;
    const double hi = mid + 0.5 * width;
    if (lo < t_start)
        throw std::invalid_argument(
            "SigmoidParams: middle section starts before t_start (mid - width/2 < t_start)");
    if (hi > t_end)
        throw std::invalid_argument(
            "SigmoidParams: middle section ends after t_end (mid + width/2 > t_end)");
    // Exclude a zero-width middle section pinned to either end, which would
    // stack three control points on one time.
    if (lo >= t_end || hi <= t_start)
        throw std::invalid_argument(
            "SigmoidParams: middle section must overlap (t_start, t_end)");
}

SigmoidParams SigmoidParams::resolved(double fallback_h_start) const {
    SigmoidParams out = *this;
    if (!out.h_start) out.h_start = fallback_h_start;
    return out;
}

HazardCurve build_endpoint_curve(const SigmoidParams& params) {
    if (params.transient)
        throw std::invalid_argument("build_endpoint_curve: params are transient");
    params.validate();
    if (!params.h_start)
        throw std::invalid_argument("build_endpoint_curve: h_start is unset");

    const double h0 = *params.h_start;
    const double lift = params.buildup * (params.h_max - h0);
    const HazardNode p1{params.t_start, h0};
    const HazardNode p2{params.mid - 0.5 * params.width, h0 + lift};
    const HazardNode p3{params.mid + 0.5 * params.width, params.h_max - lift};
    const HazardNode p4{params.t_end, params.h_max};

    // A steeper final section than middle section is an unjustified jump at
    // the end of the stressed segment: drop the interior point so the curve
    // runs straight from point 2 to the end. (A zero-width final section
    // counts as infinitely steep.)
    const bool drop_p3 = section_slope(p3, p4) > section_slope(p2, p3);

    std::vector<HazardNode> nodes;
    append_node(nodes, p1.time, p1.hazard);
    append_node(nodes, p2.time, p2.hazard);
    if (!drop_p3) append_node(nodes, p3.time, p3.hazard);
    append_node(nodes, p4.time, p4.hazard);
    return HazardCurve(std::move(nodes));
}

HazardCurve build_transient_curve(const SigmoidParams& params) {
    if (!params.transient)
        throw std::invalid_argument("build_transient_curve: params are not transient");
    params.validate();
    if (!params.h_start)
        throw std::invalid_argument("build_transient_curve: h_start is unset");

    const double h0 = *params.h_start;
    const double shoulder = h0 + params.buildup * (params.h_max - h0);

    std::vector<HazardNode> nodes;
    append_node(nodes, params.t_start, h0);
    if (params.width == 0.0) {
        // Pure spike: zero width carries no hazard mass, so the peak point
        // is not representable; the realized curve is the tent through the
        // shoulder level.
        append_node(nodes, params.mid, shoulder);
    } else {
        append_node(nodes, params.mid - 0.5 * params.width, shoulder);
        append_node(nodes, params.mid, params.h_max);
        append_node(nodes, params.mid + 0.5 * params.width, shoulder);
    }
    append_node(nodes, params.t_end, h0);
    return HazardCurve(std::move(nodes));
}

HazardCurve slowest_uniform_curve(double t_start, double h_start, double t_end,
                                  double h_max) {
    if (!(t_end > t_start))
        throw std::invalid_argument("slowest_uniform_curve: t_end must exceed t_start");
    if (h_start < 0.0 || h_max < h_start)
        throw std::invalid_argument("slowest_uniform_curve: need 0 <= h_start <= h_max");
    return HazardCurve({{t_start, h_start}, {t_end, h_max}});
}

}  // namespace ccva
