#include "ccva/xva.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "ccva/quadrature.hpp"

namespace ccva {

namespace {

constexpr double kRelTol = 1e-10;

// Exposure-grid points plus hazard node times: every kink of the integrand.
std::vector<double> integration_breaks(const ExposureProfile& exposure,
                                       const HazardCurve& hazard) {
    std::vector<double> breaks = exposure.grid;
    for (const auto& n : hazard.nodes()) breaks.push_back(n.time);
    return breaks;
}

}  // namespace

void XvaInputs::validate() const {
    if (exposure.grid.empty() || exposure.grid.front() != 0.0 ||
        exposure.grid.back() + 1e-9 < exposure.maturity)
        throw std::invalid_argument("XvaInputs: exposure grid must cover [0, maturity]");
    if (!(lgd > 0.0) || lgd > 1.0)
        throw std::invalid_argument("XvaInputs: lgd must be in (0, 1]");
    if (funding_spread < 0.0)
        throw std::invalid_argument("XvaInputs: funding_spread must be >= 0");
}

double cva(const XvaInputs& in) {
    in.validate();
    const auto breaks = integration_breaks(in.exposure, in.hazard);
    const auto integrand = [&](double u) {
        return in.hazard.hazard_at(u) * in.hazard.survival(u) * in.discount.discount(u) *
               in.exposure.epe_at(u);
    };
    return in.lgd * quad::integrate(integrand, 0.0, in.exposure.maturity, breaks, kRelTol);
}

double fva(const XvaInputs& in, FvaMode mode) {
    in.validate();
    const auto breaks = integration_breaks(in.exposure, in.hazard);
    const auto integrand = [&](double u) {
        const double x = mode == FvaMode::Fca ? in.exposure.epe_at(u) : in.exposure.ee_at(u);
        return in.hazard.survival(u) * in.discount.discount(u) * x;
    };
    return in.funding_spread *
           quad::integrate(integrand, 0.0, in.exposure.maturity, breaks, kRelTol);
}

XvaReport report_percentage_changes(XvaReport r) {
    constexpr double kUndefined = std::numeric_limits<double>::quiet_NaN();
    r.cd_cva_pct = r.cva_mp != 0.0 ? 100.0 * r.cd_cva / r.cva_mp : kUndefined;
    r.cd_fva_pct = r.fva_mp != 0.0 ? 100.0 * r.cd_fva / r.fva_mp : kUndefined;
    const double combined_mp = r.cva_mp + r.fva_mp;
    r.ccva_pct = combined_mp != 0.0 ? 100.0 * r.ccva / combined_mp : kUndefined;
    return r;
}

XvaReport ccva_from_curves(const HazardCurve& market_practice,
                           const HazardCurve& climate_stressed,
                           const ExposureProfile& exposure, const DiscountCurve& discount,
                           double lgd, double funding_spread, FvaMode mode) {
    const XvaInputs mp{exposure, market_practice, discount, lgd, funding_spread};
    const XvaInputs cc{exposure, climate_stressed, discount, lgd, funding_spread};

    XvaReport r;
    r.cva_mp = cva(mp);
    r.fva_mp = fva(mp, mode);
    r.cva_cc = cva(cc);
    r.fva_cc = fva(cc, mode);
    r.cd_cva = r.cva_cc - r.cva_mp;
    r.cd_fva = r.fva_cc - r.fva_mp;
    r.ccva = r.cd_cva + r.cd_fva;
    return report_percentage_changes(r);
}

XvaReport ccva_report(const CdsQuote& quote, const SigmoidParams& params,
                      const SwapSpec& swap, const MarketConfig& market) {
    quote.validate();
    const DiscountCurve discount(market.discount_rate);
    const HazardCurve xi = extend_curve_xi(quote);
    const HazardCurve cc = extend_curve_p(quote, params);
    const ExposureProfile profile =
        exposure_profile(swap, discount, market.normal_vol, market.grid_step);
    return ccva_from_curves(xi, cc, profile, discount, 1.0 - quote.recovery,
                            market.funding_spread, market.fva_mode);
}

}  // namespace ccva
