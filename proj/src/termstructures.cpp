#include "ccva/termstructures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ccva {

DiscountCurve::DiscountCurve(double flat_rate) : rate_(flat_rate) {
    if (!std::isfinite(flat_rate))
        throw std::invalid_argument("DiscountCurve: rate must be finite");
}

double DiscountCurve::discount(double t) const {
    if (t < 0.0) throw std::invalid_argument("DiscountCurve::discount: t must be >= 0");
    return std::exp(-rate_ * t);
}

HazardCurve::HazardCurve(std::vector<HazardNode> nodes) : nodes_(std::move(nodes)) {
    if (nodes_.empty()) throw std::invalid_argument("HazardCurve: at least one node required");
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const auto& n = nodes_[i];
        if (!std::isfinite(n.time) || !std::isfinite(n.hazard))
            throw std::invalid_argument("HazardCurve: non-finite node");
        if (n.time < 0.0) throw std::invalid_argument("HazardCurve: node time must be >= 0");
        if (n.hazard < 0.0) throw std::invalid_argument("HazardCurve: hazard must be >= 0");
        if (i > 0 && n.time < nodes_[i - 1].time)
            throw std::invalid_argument("HazardCurve: node times must be non-decreasing");
        if (i > 1 && n.time == nodes_[i - 2].time)
            throw std::invalid_argument(
                "HazardCurve: at most two nodes (a jump) may share a time");
    }

    // Lambda at each node time; zero-width jump segments contribute nothing.
    cumulative_.resize(nodes_.size());
    cumulative_[0] = nodes_[0].hazard * nodes_[0].time;  // flat before the first node
    for (std::size_t i = 1; i < nodes_.size(); ++i) {
        const double dt = nodes_[i].time - nodes_[i - 1].time;
        cumulative_[i] =
            cumulative_[i - 1] + 0.5 * (nodes_[i - 1].hazard + nodes_[i].hazard) * dt;
    }
}

HazardCurve HazardCurve::flat(double hazard) {
    return HazardCurve({{0.0, hazard}});
}

double HazardCurve::hazard_at(double t) const {
    if (t < 0.0) throw std::invalid_argument("HazardCurve::hazard_at: t must be >= 0");
    if (t <= nodes_.front().time) return nodes_.front().hazard;
    if (t >= nodes_.back().time) return nodes_.back().hazard;

    // First node strictly past t; its predecessor is the segment's left end
    // (for a jump at exactly t this picks the right limit).
    const auto it = std::upper_bound(
        nodes_.begin(), nodes_.end(), t,
        [](double value, const HazardNode& n) { return value < n.time; });
    const auto& right = *it;
    const auto& left = *std::prev(it);
    if (right.time == left.time) return right.hazard;
    const double alpha = (t - left.time) / (right.time - left.time);
    return left.hazard + alpha * (right.hazard - left.hazard);
}

double HazardCurve::cumulative_hazard(double t) const {
    if (t < 0.0)
        throw std::invalid_argument("HazardCurve::cumulative_hazard: t must be >= 0");
    if (t == 0.0) return 0.0;
    if (t <= nodes_.front().time) return nodes_.front().hazard * t;
    if (t >= nodes_.back().time)
        return cumulative_.back() + nodes_.back().hazard * (t - nodes_.back().time);

    const auto it = std::upper_bound(
        nodes_.begin(), nodes_.end(), t,
        [](double value, const HazardNode& n) { return value < n.time; });
    const std::size_t left = static_cast<std::size_t>(it - nodes_.begin()) - 1;
    return cumulative_[left] +
           0.5 * (nodes_[left].hazard + hazard_at(t)) * (t - nodes_[left].time);
}

double HazardCurve::survival(double t) const {
    return std::exp(-cumulative_hazard(t));
}

}  // namespace ccva
