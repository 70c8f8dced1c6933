#pragma once

#include "ccva/cds.hpp"
#include "ccva/exposure.hpp"

namespace ccva {

/// How the funding integral weights the exposure. Fca funds positive
/// exposure only (EPE); Signed integrates the symmetric expected exposure,
/// which is identically zero for an ATM driftless swap.
enum class FvaMode { Fca, Signed };

struct XvaInputs {
    const ExposureProfile& exposure;
    const HazardCurve& hazard;
    const DiscountCurve& discount;
    double lgd;             // loss given default, in (0, 1]
    double funding_spread;  // rate/yr, >= 0

    void validate() const;
};

/// Expected discounted default loss:
///   CVA = lgd * integral lambda(u) S(u) D(u) EPE(u) du over [0, maturity].
/// Quadrature breakpoints are the exposure grid plus hazard-curve nodes;
/// EPE between grid points is the profile's linear interpolation.
double cva(const XvaInputs& in);

/// Expected discounted funding cost:
///   FVA = s_F * integral S(u) D(u) X(u) du,
/// with X = EPE in Fca mode and X = EE in Signed mode.
double fva(const XvaInputs& in, FvaMode mode = FvaMode::Fca);

/// CVA and FVA under the market-practice (flat-extrapolated) curve and the
/// climate-stressed curve, their differences, and percentage changes
/// relative to the market-practice values. The identities
/// cd_cva = cva_cc - cva_mp, cd_fva = fva_cc - fva_mp and
/// ccva = cd_cva + cd_fva hold exactly. Percentage fields are NaN when the
/// corresponding market-practice denominator is zero.
struct XvaReport {
    double cva_mp = 0.0;
    double fva_mp = 0.0;
    double cva_cc = 0.0;
    double fva_cc = 0.0;
    double cd_cva = 0.0;
    double cd_fva = 0.0;
    double ccva = 0.0;
    double cd_cva_pct = 0.0;
    double cd_fva_pct = 0.0;
    double ccva_pct = 0.0;  // combined change vs cva_mp + fva_mp
};

/// Fill the percentage-change fields from the level fields. Zero
/// denominators yield NaN markers rather than a failure.
XvaReport report_percentage_changes(XvaReport r);

/// Shared market configuration for report and scenario runs.
struct MarketConfig {
    double discount_rate = 0.02;    // flat continuously-compounded, /yr
    double normal_vol = 0.0020;     // Bachelier rate vol, /sqrt(yr)
    double funding_spread = 0.0100; // flat, /yr
    double grid_step = 0.25;        // exposure grid step, years
    FvaMode fva_mode = FvaMode::Fca;
};

/// Evaluate both measures against one shared exposure profile (credit and
/// market moves are independent, so the profile does not depend on the
/// hazard curve) and difference them.
XvaReport ccva_from_curves(const HazardCurve& market_practice,
                           const HazardCurve& climate_stressed,
                           const ExposureProfile& exposure,
                           const DiscountCurve& discount, double lgd,
                           double funding_spread, FvaMode mode = FvaMode::Fca);

/// End-to-end report for one trade: bootstrap the quote, build the
/// flat-extrapolated and sigmoid-extended curves, evaluate, difference.
XvaReport ccva_report(const CdsQuote& quote, const SigmoidParams& params,
                      const SwapSpec& swap, const MarketConfig& market);

}  // namespace ccva
