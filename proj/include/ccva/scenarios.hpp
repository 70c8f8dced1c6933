#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "ccva/xva.hpp"

namespace ccva {

/// Market setup shared by every cell of a scenario grid.
struct ScenarioMarket {
    CdsQuote quote{10.0, 0.0100, 0.40};
    MarketConfig market{};
    double h_max = 0.25;  // hazard cap / stress peak, rate/yr
};

/// Hazard rates rise in a straight line from the end of the traded CDS to
/// the stress endpoint, then stay at the cap. Axis 1: widths (years from
/// t_start to the endpoint); axis 2: swap maturities.
struct SlowestUniformConfig {
    std::vector<double> widths = {20, 30, 40, 50, 60, 70};
    std::vector<double> irs_maturities = {20, 30, 40, 50};
    ScenarioMarket shared{};
};

/// Endpoint sigmoid centred on the middle of the stressed section, with a
/// small build-up fraction. Axis 1: widths; axis 2: swap maturities.
struct MidpointConfig {
    std::vector<double> widths = {1, 10, 20, 30, 40, 50, 60, 70};
    std::vector<double> irs_maturities = {20, 30, 40, 50};
    double t_end = 80.0;
    double buildup = 0.05;
    /// true: mid = (t_start + t_end)/2 (middle of the stressed section);
    /// false: mid = t_end/2 (middle of the whole horizon) for sensitivity.
    bool mid_of_stressed_section = true;
    ScenarioMarket shared{};
};

/// Transient stress for a fixed swap. Axis 1: widths (durations); axis 2:
/// times to mid-transition. Midpoints must lie beyond the traded CDS
/// maturity: within it the bank can hedge, so the stress is not a scenario.
struct TransitionConfig {
    std::vector<double> widths = {1, 5, 10};
    std::vector<double> midpoints = {15, 25, 35, 45, 55, 65, 75};
    double irs_maturity = 30.0;
    double t_end = 80.0;
    double buildup = 0.05;
    ScenarioMarket shared{};
};

struct GridCell {
    XvaReport report{};
    /// Transition family: survival-probability change over the stress
    /// window net of the flat-extrapolation baseline, percentage points.
    double survival_change_pct = 0.0;
    bool ok = false;
    std::string error;
};

/// Row-major grid of per-cell reports plus per-row diagnostics. Failed
/// cells carry their error text instead of being dropped.
struct ResultGrid {
    std::string family;
    std::string row_label;
    std::string col_label;
    std::vector<double> rows;
    std::vector<double> cols;
    std::vector<GridCell> cells;

    // slowest-uniform diagnostics, one entry per row (width)
    std::vector<double> hazard_slope_bps_per_year;
    std::vector<double> hazard_level_80y_bps;  // uncapped ramp level at 80y

    const GridCell& at(std::size_t row, std::size_t col) const;
    GridCell& at(std::size_t row, std::size_t col);
};

ResultGrid run_slowest_uniform(const SlowestUniformConfig& cfg);
ResultGrid run_midpoint(const MidpointConfig& cfg);
ResultGrid run_transition(const TransitionConfig& cfg);

/// 100 * (S(t2)/S(t1) - 1): relative survival change over a window.
double survival_change_over_window(const HazardCurve& curve, double t1, double t2);

/// Survival change over the window in percentage points, net of the
/// baseline curve: 100 * [(S_s(t2) - S_s(t1)) - (S_b(t2) - S_b(t1))].
/// This is the transition-grid diagnostic (the extra default probability
/// picked up during the stress relative to flat extrapolation).
double excess_survival_change_over_window(const HazardCurve& stressed,
                                          const HazardCurve& baseline, double t1,
                                          double t2);

/// Run `work(i)` for i in [0, count) on a small thread pool. Results must
/// be written to disjoint slots; the merge is by index, so the outcome does
/// not depend on the worker count. CCVA_MAX_WORKERS caps the pool.
void parallel_for_index(std::size_t count, const std::function<void(std::size_t)>& work);

}  // namespace ccva
