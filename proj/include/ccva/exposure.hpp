#pragma once

#include <vector>

#include "ccva/termstructures.hpp"

namespace ccva {

/// An at-the-money interest rate swap: fixed rate struck at par, so the
/// time-0 value is zero and the par-rate displacement drives the exposure.
struct SwapSpec {
    double maturity = 30.0;  // years; whole number of payment periods
    int pay_frequency = 1;   // payments per year
    double notional = 1.0;
    bool atm = true;

    void validate() const;
};

/// Sum of discounted accrual factors for payment dates strictly after t, up
/// to maturity, discounted to the valuation time t (i.e. D(t_k)/D(t)).
/// annuity(maturity) = 0.
double annuity(const DiscountCurve& discount, double t, double maturity,
               int frequency);

/// Expected positive exposure of the residual swap at time t under a flat
/// normal (Bachelier) par-rate volatility:
///   EPE(t) = notional * annuity(t) * vol * sqrt(t) / sqrt(2*pi)
/// The residual value is modelled as annuity(t) times a N(0, vol^2 t)
/// par-rate displacement; ATM and driftless, so EE(t) = 0 and
/// ENE(t) = -EPE(t).
double atm_epe(const SwapSpec& swap, const DiscountCurve& discount,
               double normal_vol, double t);

/// Expected exposures of one uncollateralized trade on a uniform time grid.
/// Values are time-t expectations (undiscounted); discounting to time 0
/// happens in the valuation-adjustment integrals.
struct ExposureProfile {
    std::vector<double> grid;  // 0 .. maturity, uniform
    std::vector<double> epe;   // E[(Pi(t))^+], >= 0, epe(maturity) = 0
    std::vector<double> ene;   // E[(Pi(t))^-] = -epe for ATM
    std::vector<double> ee;    // E[Pi(t)] = 0 for ATM
    double maturity = 0.0;

    /// Linear interpolation on the grid; 0 beyond maturity.
    double epe_at(double t) const;
    double ee_at(double t) const;
};

/// Evaluate the ATM exposure profile on a uniform grid of step `grid_step`
/// (default quarterly). The final grid point is exactly the maturity and
/// its EPE is exactly zero.
ExposureProfile exposure_profile(const SwapSpec& swap, const DiscountCurve& discount,
                                 double normal_vol, double grid_step = 0.25);

}  // namespace ccva
