#include "ccva/exposure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ccva {

namespace {
constexpr double kInvSqrt2Pi = 0.3989422804014327;  // phi(0)
}

void SwapSpec::validate() const {
    if (!std::isfinite(maturity) || maturity <= 0.0)
        throw std::invalid_argument("SwapSpec: maturity must be > 0");
    if (pay_frequency < 1) throw std::invalid_argument("SwapSpec: pay_frequency must be >= 1");
    if (!std::isfinite(notional) || notional <= 0.0)
        throw std::invalid_argument("SwapSpec: notional must be > 0");
    const double periods = maturity * pay_frequency;
    if (std::abs(periods - std::round(periods)) > 1e-6)
        throw std::invalid_argument("SwapSpec: maturity must be a whole number of periods");
    if (!atm) throw std::invalid_argument("SwapSpec: only ATM swaps are supported");
}

double annuity(const DiscountCurve& discount, double t, double maturity, int frequency) {
    if (t < 0.0 || t > maturity + 1e-12)
        throw std::invalid_argument("annuity: t must lie in [0, maturity]");
    if (frequency < 1) throw std::invalid_argument("annuity: frequency must be >= 1");

    const double accrual = 1.0 / frequency;
    const long periods = std::lround(maturity * frequency);
    const double eps = 1e-12 * std::max(1.0, t);
    double sum = 0.0;
    for (long k = 1; k <= periods; ++k) {
        const double pay_date = accrual * static_cast<double>(k);
        if (pay_date <= t + eps) continue;
        sum += accrual * discount.discount(pay_date);
    }
    // Payment dates are discounted to the valuation time t; the discounting
    // of the exposure itself back to time 0 happens in the XVA integrals.
    return sum / discount.discount(t);
}

double atm_epe(const SwapSpec& swap, const DiscountCurve& discount, double normal_vol,
               double t) {
    swap.validate();
    if (normal_vol < 0.0) throw std::invalid_argument("atm_epe: vol must be >= 0");
    if (t < 0.0 || t > swap.maturity + 1e-12)
        throw std::invalid_argument("atm_epe: t must lie in [0, maturity]");
    if (t >= swap.maturity) return 0.0;
    const double ann = annuity(discount, t, swap.maturity, swap.pay_frequency);
    return swap.notional * ann * normal_vol * std::sqrt(t) * kInvSqrt2Pi;
}

double ExposureProfile::epe_at(double t) const {
    if (grid.empty()) throw std::logic_error("ExposureProfile: empty grid");
    if (t <= grid.front()) return epe.front();
    if (t >= grid.back()) return 0.0;
    const auto it = std::upper_bound(grid.begin(), grid.end(), t);
    const std::size_t hi = static_cast<std::size_t>(it - grid.begin());
    const std::size_t lo = hi - 1;
    const double alpha = (t - grid[lo]) / (grid[hi] - grid[lo]);
    return epe[lo] + alpha * (epe[hi] - epe[lo]);
}

double ExposureProfile::ee_at(double t) const {
    if (grid.empty()) throw std::logic_error("ExposureProfile: empty grid");
    if (t <= grid.front()) return ee.front();
    if (t >= grid.back()) return 0.0;
    const auto it = std::upper_bound(grid.begin(), grid.end(), t);
    const std::size_t hi = static_cast<std::size_t>(it - grid.begin());
    const std::size_t lo = hi - 1;
    const double alpha = (t - grid[lo]) / (grid[hi] - grid[lo]);
    return ee[lo] + alpha * (ee[hi] - ee[lo]);
}

ExposureProfile exposure_profile(const SwapSpec& swap, const DiscountCurve& discount,
                                 double normal_vol, double grid_step) {
    swap.validate();
    if (grid_step <= 0.0)
        throw std::invalid_argument("exposure_profile: grid_step must be > 0");

    const auto points = static_cast<std::size_t>(std::llround(swap.maturity / grid_step));
    if (std::abs(points * grid_step - swap.maturity) > 1e-9)
        throw std::invalid_argument(
            "exposure_profile: grid_step must divide the swap maturity");

    ExposureProfile profile;
    profile.maturity = swap.maturity;
    profile.grid.reserve(points + 1);
    profile.epe.reserve(points + 1);
    for (std::size_t i = 0; i <= points; ++i) {
        const double t = (i == points) ? swap.maturity : grid_step * static_cast<double>(i);
        profile.grid.push_back(t);
        profile.epe.push_back(atm_epe(swap, discount, normal_vol, t));
    }
    profile.epe.back() = 0.0;  // exact terminal condition
    profile.ee.assign(profile.grid.size(), 0.0);
    profile.ene.resize(profile.grid.size());
    for (std::size_t i = 0; i < profile.epe.size(); ++i) profile.ene[i] = -profile.epe[i];
    return profile;
}

}  // namespace ccva
