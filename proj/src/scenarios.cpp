#include "ccva/scenarios.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace ccva {

namespace {

void require_axis(const std::vector<double>& axis, const char* name) {
    if (axis.empty()) throw std::invalid_argument(std::string(name) + ": axis is empty");
    for (std::size_t i = 1; i < axis.size(); ++i)
        if (axis[i] <= axis[i - 1])
            throw std::invalid_argument(std::string(name) + ": axis must be strictly increasing");
}

ResultGrid make_grid(std::string family, std::string row_label, std::string col_label,
                     std::vector<double> rows, std::vector<double> cols) {
    ResultGrid grid;
    grid.family = std::move(family);
    grid.row_label = std::move(row_label);
    grid.col_label = std::move(col_label);
    grid.rows = std::move(rows);
    grid.cols = std::move(cols);
    grid.cells.resize(grid.rows.size() * grid.cols.size());
    return grid;
}

// Evaluate one cell, capturing any failure as text instead of dropping it.
template <typename Fn>
void eval_cell(GridCell& cell, Fn&& fn) {
    try {
        fn(cell);
        cell.ok = true;
    } catch (const std::exception& e) {
        cell.ok = false;
        cell.error = e.what();
    }
}

}  // namespace

const GridCell& ResultGrid::at(std::size_t row, std::size_t col) const {
    if (row >= rows.size() || col >= cols.size())
        throw std::out_of_range("ResultGrid::at: index out of range");
    return cells[row * cols.size() + col];
}

GridCell& ResultGrid::at(std::size_t row, std::size_t col) {
    if (row >= rows.size() || col >= cols.size())
        throw std::out_of_range("ResultGrid::at: index out of range");
    return cells[row * cols.size() + col];
}

void parallel_for_index(std::size_t count, const std::function<void(std::size_t)>& work) {
    if (count == 0) return;
    std::size_t workers = std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    if (const char* cap = std::getenv("CCVA_MAX_WORKERS")) {
        char* end = nullptr;
        const long parsed = std::strtol(cap, &end, 10);
        if (end != cap && parsed >= 1)
            workers = std::min(workers, static_cast<std::size_t>(parsed));
    }
    workers = std::min(workers, count);

    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) work(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) work(i);
        });
    }
    for (auto& t : pool) t.join();
}

ResultGrid run_slowest_uniform(const SlowestUniformConfig& cfg) {
    require_axis(cfg.widths, "run_slowest_uniform: widths");
    require_axis(cfg.irs_maturities, "run_slowest_uniform: irs_maturities");
    cfg.shared.quote.validate();

    ResultGrid grid = make_grid("slowest-uniform", "width_years", "irs_maturity_years",
                                cfg.widths, cfg.irs_maturities);

    const double t_start = cfg.shared.quote.maturity;
    const double boot_level =
        cfg.shared.quote.spread / (1.0 - cfg.shared.quote.recovery);

    grid.hazard_slope_bps_per_year.reserve(cfg.widths.size());
    grid.hazard_level_80y_bps.reserve(cfg.widths.size());
    for (double width : cfg.widths) {
        grid.hazard_slope_bps_per_year.push_back(cfg.shared.h_max * 1e4 / width);
        grid.hazard_level_80y_bps.push_back(
            (boot_level + (cfg.shared.h_max - boot_level) * (80.0 - t_start) / width) * 1e4);
    }

    const std::size_t ncols = cfg.irs_maturities.size();
    parallel_for_index(grid.cells.size(), [&](std::size_t idx) {
        eval_cell(grid.cells[idx], [&](GridCell& cell) {
            const double width = cfg.widths[idx / ncols];
            const double irs = cfg.irs_maturities[idx % ncols];
            const DiscountCurve discount(cfg.shared.market.discount_rate);
            const HazardCurve xi = extend_curve_xi(cfg.shared.quote);
            const HazardCurve cc = extend_curve(
                cfg.shared.quote,
                slowest_uniform_curve(t_start, boot_level, t_start + width, cfg.shared.h_max));
            const SwapSpec swap{irs, 1, 1.0, true};
            const ExposureProfile profile = exposure_profile(
                swap, discount, cfg.shared.market.normal_vol, cfg.shared.market.grid_step);
            cell.report = ccva_from_curves(xi, cc, profile, discount,
                                           1.0 - cfg.shared.quote.recovery,
                                           cfg.shared.market.funding_spread,
                                           cfg.shared.market.fva_mode);
        });
    });
    return grid;
}

ResultGrid run_midpoint(const MidpointConfig& cfg) {
    require_axis(cfg.widths, "run_midpoint: widths");
    require_axis(cfg.irs_maturities, "run_midpoint: irs_maturities");
    cfg.shared.quote.validate();
    if (cfg.t_end <= cfg.shared.quote.maturity)
        throw std::invalid_argument("run_midpoint: t_end must exceed the traded CDS maturity");

    ResultGrid grid = make_grid("midpoint", "width_years", "irs_maturity_years", cfg.widths,
                                cfg.irs_maturities);

    const double t_start = cfg.shared.quote.maturity;
    const double mid =
        cfg.mid_of_stressed_section ? 0.5 * (t_start + cfg.t_end) : 0.5 * cfg.t_end;

    const std::size_t ncols = cfg.irs_maturities.size();
    parallel_for_index(grid.cells.size(), [&](std::size_t idx) {
        eval_cell(grid.cells[idx], [&](GridCell& cell) {
            const double width = cfg.widths[idx / ncols];
            const double irs = cfg.irs_maturities[idx % ncols];

            SigmoidParams params;
            params.transient = false;
            params.t_start = t_start;
            params.mid = mid;
            params.width = width;
            params.buildup = cfg.buildup;
            params.t_end = cfg.t_end;
            params.h_max = cfg.shared.h_max;

            const SwapSpec swap{irs, 1, 1.0, true};
            cell.report = ccva_report(cfg.shared.quote, params, swap, cfg.shared.market);
        });
    });
    return grid;
}

ResultGrid run_transition(const TransitionConfig& cfg) {
    require_axis(cfg.widths, "run_transition: widths");
    require_axis(cfg.midpoints, "run_transition: midpoints");
    cfg.shared.quote.validate();
    for (double mid : cfg.midpoints)
        if (mid <= cfg.shared.quote.maturity)
            throw std::invalid_argument(
                "run_transition: midpoints must lie beyond the traded CDS maturity "
                "(stress inside the hedgeable horizon is not a scenario)");

    ResultGrid grid =
        make_grid("transition", "width_years", "mid_years", cfg.widths, cfg.midpoints);

    const double t_start = cfg.shared.quote.maturity;
    const std::size_t ncols = cfg.midpoints.size();
    parallel_for_index(grid.cells.size(), [&](std::size_t idx) {
        eval_cell(grid.cells[idx], [&](GridCell& cell) {
            const double width = cfg.widths[idx / ncols];
            const double mid = cfg.midpoints[idx % ncols];

            SigmoidParams params;
            params.transient = true;
            params.t_start = t_start;
            params.mid = mid;
            params.width = width;
            params.buildup = cfg.buildup;
            params.t_end = cfg.t_end;
            params.h_max = cfg.shared.h_max;

            const SwapSpec swap{cfg.irs_maturity, 1, 1.0, true};
            cell.report = ccva_report(cfg.shared.quote, params, swap, cfg.shared.market);

            const HazardCurve xi = extend_curve_xi(cfg.shared.quote);
            const HazardCurve cc = extend_curve_p(cfg.shared.quote, params);
            cell.survival_change_pct = excess_survival_change_over_window(
                cc, xi, mid - 0.5 * width, mid + 0.5 * width);
        });
    });
    return grid;
}

double survival_change_over_window(const HazardCurve& curve, double t1, double t2) {
    if (!(t1 < t2) || t1 < 0.0)
        throw std::invalid_argument("survival_change_over_window: need 0 <= t1 < t2");
    return 100.0 * (curve.survival(t2) / curve.survival(t1) - 1.0);
}

double excess_survival_change_over_window(const HazardCurve& stressed,
                                          const HazardCurve& baseline, double t1, double t2) {
    if (!(t1 < t2) || t1 < 0.0)
        throw std::invalid_argument("excess_survival_change_over_window: need 0 <= t1 < t2");
    const double stressed_change = stressed.survival(t2) - stressed.survival(t1);
    const double baseline_change = baseline.survival(t2) - baseline.survival(t1);
    return 100.0 * (stressed_change - baseline_change);
}

}  // namespace ccva
