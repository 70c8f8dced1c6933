#include "ccva/cds.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "ccva/quadrature.hpp"

namespace ccva {

void CdsQuote::validate() const {
    if (!std::isfinite(maturity) || !std::isfinite(spread) || !std::isfinite(recovery))
        throw std::invalid_argument("CdsQuote: non-finite field");
    if (maturity <= 0.0) throw std::invalid_argument("CdsQuote: maturity must be > 0");
    if (spread < 0.0) throw std::invalid_argument("CdsQuote: spread must be >= 0");
    if (recovery < 0.0 || recovery >= 1.0)
        throw std::invalid_argument("CdsQuote: recovery must be in [0, 1)");
}

double par_spread(const HazardCurve& hazard, const DiscountCurve& discount,
                  double maturity, double recovery) {
    if (maturity <= 0.0) throw std::invalid_argument("par_spread: maturity must be > 0");
    if (recovery < 0.0 || recovery >= 1.0)
        throw std::invalid_argument("par_spread: recovery must be in [0, 1)");

    std::vector<double> breaks;
    breaks.reserve(hazard.nodes().size());
    for (const auto& n : hazard.nodes()) breaks.push_back(n.time);

    const auto protection = [&](double t) {
        return discount.discount(t) * hazard.hazard_at(t) * hazard.survival(t);
    };
    const auto premium = [&](double t) {
        return discount.discount(t) * hazard.survival(t);
    };

    // A curve whose survival collapses essentially at once has no premium
    // annuity to quote against.
    if (hazard.survival(maturity * 1e-9) <= 1e-300)
        throw std::domain_error("par_spread: premium annuity is degenerate (survival ~ 0)");

    constexpr double kRelTol = 1e-9;
    const double prot_leg = quad::integrate(protection, 0.0, maturity, breaks, kRelTol);
    const double fee_leg = quad::integrate(premium, 0.0, maturity, breaks, kRelTol);
    if (!(fee_leg > 0.0))
        throw std::domain_error("par_spread: premium annuity is degenerate (survival ~ 0)");
    return (1.0 - recovery) * prot_leg / fee_leg;
}

HazardCurve bootstrap_flat_hazard(const CdsQuote& quote) {
    quote.validate();
    return HazardCurve::flat(quote.spread / (1.0 - quote.recovery));
}

HazardCurve extend_curve_xi(const CdsQuote& quote, ExtrapolationPolicy policy) {
    if (policy != ExtrapolationPolicy::FlatSpread)
        throw std::invalid_argument("extend_curve_xi: unknown extrapolation policy");
    // Flat spread <=> flat hazard for all t under continuous conventions;
    // the bootstrapped curve already extrapolates flat.
    return bootstrap_flat_hazard(quote);
}

HazardCurve extend_curve(const CdsQuote& quote, const HazardCurve& stressed_tail) {
    quote.validate();
    const double traded_level = quote.spread / (1.0 - quote.recovery);
    const auto& tail = stressed_tail.nodes();
    if (tail.empty() || std::abs(tail.front().time - quote.maturity) > 1e-9)
        throw std::invalid_argument(
            "extend_curve: stressed tail must start at the traded CDS maturity");

    std::vector<HazardNode> nodes;
    nodes.reserve(tail.size() + 2);
    nodes.push_back({0.0, traded_level});
    if (tail.front().hazard != traded_level)
        nodes.push_back({quote.maturity, traded_level});  // jump at the measure switch
    for (const auto& n : tail) {
        if (!nodes.empty() && nodes.back().time == n.time) {
            if (nodes.back().hazard == n.hazard) continue;
            if (nodes.size() >= 2 && nodes[nodes.size() - 2].time == n.time) {
                // Stacked jumps at one time: only the outermost limits matter.
                nodes.back().hazard = n.hazard;
                continue;
            }
        }
        nodes.push_back(n);
    }
    return HazardCurve(std::move(nodes));
}

HazardCurve extend_curve_p(const CdsQuote& quote, const SigmoidParams& params) {
    quote.validate();
    if (std::abs(params.t_start - quote.maturity) > 1e-9)
        throw std::invalid_argument(
            "extend_curve_p: sigmoid t_start must equal the traded CDS maturity");
    const double traded_level = quote.spread / (1.0 - quote.recovery);
    const SigmoidParams resolved = params.resolved(traded_level);
    const HazardCurve tail = resolved.transient ? build_transient_curve(resolved)
                                                : build_endpoint_curve(resolved);
    return extend_curve(quote, tail);
}

}  // namespace ccva
