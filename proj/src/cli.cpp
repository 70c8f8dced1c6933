#include "ccva/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace ccva::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& msg) { throw ConfigError(msg); }

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

std::string fmt_axis(double v) { return fmt("%.10g", v); }
std::string fmt_value(double v) { return fmt("%.12e", v); }
std::string fmt_pct(double v) { return std::isnan(v) ? "n/a" : fmt("%.1f", v); }
std::string fmt_pct_full(double v) { return std::isnan(v) ? "n/a" : fmt("%.6f", v); }

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ComputeError("cannot write output file: " + path.string());
    out << content;
}

// ---------------------------------------------------------------------------
// config parsing

void check_keys(const json& obj, std::initializer_list<const char*> allowed,
                const std::string& scope) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* key : allowed)
            if (item.key() == key) known = true;
        if (!known) fail(scope + ": unknown field '" + item.key() + "'");
    }
}

double as_number(const json& v, const std::string& path) {
    if (!v.is_number()) fail(path + ": expected a number");
    return v.get<double>();
}

bool as_bool(const json& v, const std::string& path) {
    if (!v.is_boolean()) fail(path + ": expected a boolean");
    return v.get<bool>();
}

std::string as_string(const json& v, const std::string& path) {
    if (!v.is_string()) fail(path + ": expected a string");
    return v.get<std::string>();
}

std::vector<double> as_number_list(const json& v, const std::string& path) {
    if (!v.is_array()) fail(path + ": expected an array of numbers");
    std::vector<double> out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(as_number(v[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

FvaMode parse_fva_mode(const std::string& text, const std::string& path) {
    if (text == "fca") return FvaMode::Fca;
    if (text == "signed") return FvaMode::Signed;
    fail(path + ": expected \"fca\" or \"signed\", got \"" + text + "\"");
}

RunConfig parse_config_json(const json& j) {
    if (!j.is_object()) fail("config: top level must be an object");
    check_keys(j,
               {"asof", "discount_rate", "cds", "normal_vol", "funding_spread", "swap",
                "fva_mode", "grid_step", "sigmoid", "family", "scenario", "curves_step"},
               "config");

    RunConfig cfg;
    if (j.contains("asof")) cfg.asof = as_string(j["asof"], "asof");
    if (j.contains("discount_rate"))
        cfg.market.discount_rate = as_number(j["discount_rate"], "discount_rate");
    if (j.contains("normal_vol"))
        cfg.market.normal_vol = as_number(j["normal_vol"], "normal_vol");
    if (j.contains("funding_spread"))
        cfg.market.funding_spread = as_number(j["funding_spread"], "funding_spread");
    if (j.contains("grid_step")) cfg.market.grid_step = as_number(j["grid_step"], "grid_step");
    if (j.contains("fva_mode"))
        cfg.market.fva_mode = parse_fva_mode(as_string(j["fva_mode"], "fva_mode"), "fva_mode");
    if (j.contains("family")) cfg.family = as_string(j["family"], "family");
    if (j.contains("curves_step")) cfg.curves_step = as_number(j["curves_step"], "curves_step");

    if (j.contains("cds")) {
        const json& c = j["cds"];
        if (!c.is_object()) fail("cds: expected an object");
        check_keys(c, {"maturity", "spread", "recovery"}, "cds");
        if (c.contains("maturity")) cfg.quote.maturity = as_number(c["maturity"], "cds.maturity");
        if (c.contains("spread")) cfg.quote.spread = as_number(c["spread"], "cds.spread");
        if (c.contains("recovery")) cfg.quote.recovery = as_number(c["recovery"], "cds.recovery");
    }

    if (j.contains("swap")) {
        const json& s = j["swap"];
        if (!s.is_object()) fail("swap: expected an object");
        check_keys(s, {"maturity", "frequency", "notional"}, "swap");
        if (s.contains("maturity")) cfg.swap.maturity = as_number(s["maturity"], "swap.maturity");
        if (s.contains("frequency")) {
            const double f = as_number(s["frequency"], "swap.frequency");
            if (f < 1.0 || f != std::round(f)) fail("swap.frequency: expected a positive integer");
            cfg.swap.pay_frequency = static_cast<int>(f);
        }
        if (s.contains("notional")) cfg.swap.notional = as_number(s["notional"], "swap.notional");
    }

    if (j.contains("sigmoid")) {
        const json& s = j["sigmoid"];
        if (!s.is_object()) fail("sigmoid: expected an object");
        check_keys(s, {"transient", "t_start", "h_start", "mid", "width", "buildup", "t_end",
                       "h_max"},
                   "sigmoid");
        if (s.contains("transient")) cfg.sigmoid.transient = as_bool(s["transient"], "sigmoid.transient");
        if (s.contains("t_start")) cfg.sigmoid.t_start = as_number(s["t_start"], "sigmoid.t_start");
        if (s.contains("h_start")) {
            if (s["h_start"].is_null())
                cfg.sigmoid.h_start.reset();
            else
                cfg.sigmoid.h_start = as_number(s["h_start"], "sigmoid.h_start");
        }
        if (s.contains("mid")) cfg.sigmoid.mid = as_number(s["mid"], "sigmoid.mid");
        if (s.contains("width")) cfg.sigmoid.width = as_number(s["width"], "sigmoid.width");
        if (s.contains("buildup")) cfg.sigmoid.buildup = as_number(s["buildup"], "sigmoid.buildup");
        if (s.contains("t_end")) cfg.sigmoid.t_end = as_number(s["t_end"], "sigmoid.t_end");
        if (s.contains("h_max")) cfg.sigmoid.h_max = as_number(s["h_max"], "sigmoid.h_max");
    }

    if (j.contains("scenario")) {
        const json& s = j["scenario"];
        if (!s.is_object()) fail("scenario: expected an object");
        check_keys(s, {"h_max", "widths", "maturities", "midpoints"}, "scenario");
        if (s.contains("h_max")) cfg.scenario_h_max = as_number(s["h_max"], "scenario.h_max");
        if (s.contains("widths")) cfg.grid_widths = as_number_list(s["widths"], "scenario.widths");
        if (s.contains("maturities"))
            cfg.grid_maturities = as_number_list(s["maturities"], "scenario.maturities");
        if (s.contains("midpoints"))
            cfg.grid_midpoints = as_number_list(s["midpoints"], "scenario.midpoints");
    }

    cfg.validate();
    return cfg;
}

void require_sane_rate(double value, const char* field) {
    if (!std::isfinite(value) || std::abs(value) >= 1.0)
        fail(std::string(field) + ": rate must be finite with |rate| < 1/yr");
}

// ---------------------------------------------------------------------------
// outputs

std::string report_csv(const XvaReport& r) {
    std::ostringstream out;
    out << "cva_mp,fva_mp,cva_cc,fva_cc,cd_cva,cd_fva,ccva,cd_cva_pct,cd_fva_pct,ccva_pct\n";
    out << fmt_value(r.cva_mp) << ',' << fmt_value(r.fva_mp) << ',' << fmt_value(r.cva_cc)
        << ',' << fmt_value(r.fva_cc) << ',' << fmt_value(r.cd_cva) << ','
        << fmt_value(r.cd_fva) << ',' << fmt_value(r.ccva) << ',' << fmt_pct(r.cd_cva_pct)
        << ',' << fmt_pct(r.cd_fva_pct) << ',' << fmt_pct(r.ccva_pct) << '\n';
    return out.str();
}

std::string pct_table_csv(const ResultGrid& g, double XvaReport::*field) {
    std::ostringstream out;
    out << g.row_label;
    for (double c : g.cols) out << ',' << fmt_axis(c);
    out << '\n';
    for (std::size_t r = 0; r < g.rows.size(); ++r) {
        out << fmt_axis(g.rows[r]);
        for (std::size_t c = 0; c < g.cols.size(); ++c) {
            const GridCell& cell = g.at(r, c);
            out << ',' << (cell.ok ? fmt_pct(cell.report.*field) : std::string("failed"));
        }
        out << '\n';
    }
    return out.str();
}

std::string survival_change_table_csv(const ResultGrid& g) {
    std::ostringstream out;
    out << g.row_label;
    for (double c : g.cols) out << ',' << fmt_axis(c);
    out << '\n';
    for (std::size_t r = 0; r < g.rows.size(); ++r) {
        out << fmt_axis(g.rows[r]);
        for (std::size_t c = 0; c < g.cols.size(); ++c) {
            const GridCell& cell = g.at(r, c);
            out << ',' << (cell.ok ? fmt_pct(cell.survival_change_pct) : std::string("failed"));
        }
        out << '\n';
    }
    return out.str();
}

std::string diagnostics_csv(const ResultGrid& g) {
    std::ostringstream out;
    out << "width_years,cds_slope_bps_per_year,extrapolated_level_80y_bps\n";
    for (std::size_t r = 0; r < g.rows.size(); ++r)
        out << fmt_axis(g.rows[r]) << ',' << fmt("%.1f", g.hazard_slope_bps_per_year[r]) << ','
            << fmt("%.1f", g.hazard_level_80y_bps[r]) << '\n';
    return out.str();
}

std::string results_csv(const ResultGrid& g) {
    std::ostringstream out;
    out << "family," << g.row_label << ',' << g.col_label
        << ",status,cva_mp,fva_mp,cva_cc,fva_cc,cd_cva,cd_fva,ccva,"
           "cd_cva_pct,cd_fva_pct,ccva_pct,survival_change_pct,error\n";
    for (std::size_t r = 0; r < g.rows.size(); ++r) {
        for (std::size_t c = 0; c < g.cols.size(); ++c) {
            const GridCell& cell = g.at(r, c);
            out << g.family << ',' << fmt_axis(g.rows[r]) << ',' << fmt_axis(g.cols[c]) << ','
                << (cell.ok ? "ok" : "failed");
            if (cell.ok) {
                const XvaReport& rep = cell.report;
                out << ',' << fmt_value(rep.cva_mp) << ',' << fmt_value(rep.fva_mp) << ','
                    << fmt_value(rep.cva_cc) << ',' << fmt_value(rep.fva_cc) << ','
                    << fmt_value(rep.cd_cva) << ',' << fmt_value(rep.cd_fva) << ','
                    << fmt_value(rep.ccva) << ',' << fmt_pct_full(rep.cd_cva_pct) << ','
                    << fmt_pct_full(rep.cd_fva_pct) << ',' << fmt_pct_full(rep.ccva_pct) << ','
                    << (g.family == "transition" ? fmt_pct_full(cell.survival_change_pct)
                                                 : std::string(""))
                    << ',';
            } else {
                out << ",,,,,,,,,,," << csv_escape(cell.error);
            }
            out << '\n';
        }
    }
    return out.str();
}

void write_sidecars(const RunConfig& cfg, const std::string& subcommand,
                    const fs::path& out_dir, double elapsed_ms) {
    write_file(out_dir / "resolved_config.json", resolved_config_json(cfg));
    std::ostringstream info;
    info << "tool: ccva\nsubcommand: " << subcommand << "\nasof: " << cfg.asof
         << "\nelapsed_ms: " << fmt("%.1f", elapsed_ms) << '\n';
    write_file(out_dir / "run_info.txt", info.str());
}

int run_report(const RunConfig& cfg, const fs::path& out_dir, std::string& err) {
    try {
        const XvaReport report = ccva_report(cfg.quote, cfg.sigmoid, cfg.swap, cfg.market);
        write_file(out_dir / "report.csv", report_csv(report));
        return 0;
    } catch (const std::exception& e) {
        err = std::string("report failed: ") + e.what();
        return 2;
    }
}

int run_grid(const RunConfig& cfg, const fs::path& out_dir, std::string& err) {
    ScenarioMarket shared;
    shared.quote = cfg.quote;
    shared.market = cfg.market;
    shared.h_max = cfg.scenario_h_max;

    ResultGrid grid;
    try {
        if (cfg.family == "slowest-uniform") {
            SlowestUniformConfig c;
            c.shared = shared;
            if (!cfg.grid_widths.empty()) c.widths = cfg.grid_widths;
            if (!cfg.grid_maturities.empty()) c.irs_maturities = cfg.grid_maturities;
            grid = run_slowest_uniform(c);
        } else if (cfg.family == "midpoint") {
            MidpointConfig c;
            c.shared = shared;
            if (!cfg.grid_widths.empty()) c.widths = cfg.grid_widths;
            if (!cfg.grid_maturities.empty()) c.irs_maturities = cfg.grid_maturities;
            grid = run_midpoint(c);
        } else if (cfg.family == "transition") {
            TransitionConfig c;
            c.shared = shared;
            if (!cfg.grid_widths.empty()) c.widths = cfg.grid_widths;
            if (!cfg.grid_midpoints.empty()) c.midpoints = cfg.grid_midpoints;
            if (!cfg.grid_maturities.empty()) {
                if (cfg.grid_maturities.size() != 1)
                    fail("scenario.maturities: the transition family uses a single maturity");
                c.irs_maturity = cfg.grid_maturities.front();
            }
            grid = run_transition(c);
        } else {
            fail("family: expected slowest-uniform, midpoint or transition, got '" +
                 cfg.family + "'");
        }
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        err = std::string("grid failed: ") + e.what();
        return 2;
    }

    write_file(out_dir / "results.csv", results_csv(grid));
    write_file(out_dir / "cva_change.csv", pct_table_csv(grid, &XvaReport::cd_cva_pct));
    write_file(out_dir / "fva_change.csv", pct_table_csv(grid, &XvaReport::cd_fva_pct));
    write_file(out_dir / "combined_change.csv", pct_table_csv(grid, &XvaReport::ccva_pct));
    if (grid.family == "slowest-uniform")
        write_file(out_dir / "diagnostics.csv", diagnostics_csv(grid));
    if (grid.family == "transition")
        write_file(out_dir / "survival_change.csv", survival_change_table_csv(grid));

    for (std::size_t r = 0; r < grid.rows.size(); ++r) {
        for (std::size_t c = 0; c < grid.cols.size(); ++c) {
            const GridCell& cell = grid.at(r, c);
            if (!cell.ok) {
                err = "grid cell (" + grid.row_label + "=" + fmt_axis(grid.rows[r]) + ", " +
                      grid.col_label + "=" + fmt_axis(grid.cols[c]) + ") failed: " + cell.error;
                return 2;
            }
        }
    }
    return 0;
}

int run_curves(const RunConfig& cfg, const fs::path& out_dir, std::string& err) {
    try {
        const DiscountCurve discount(cfg.market.discount_rate);
        const double boot_level = cfg.quote.spread / (1.0 - cfg.quote.recovery);

        SigmoidParams endpoint = cfg.sigmoid;
        endpoint.transient = false;
        SigmoidParams transient = cfg.sigmoid;
        transient.transient = true;

        const HazardCurve flat = extend_curve_xi(cfg.quote);
        const HazardCurve ep_curve = extend_curve_p(cfg.quote, endpoint);
        const HazardCurve tr_curve = extend_curve_p(cfg.quote, transient);
        const HazardCurve ramp = extend_curve(
            cfg.quote, slowest_uniform_curve(cfg.quote.maturity, boot_level,
                                             cfg.sigmoid.t_end, cfg.sigmoid.h_max));

        std::ostringstream curves;
        curves << "time_years,hazard_flat,survival_flat,hazard_endpoint,survival_endpoint,"
                  "hazard_transient,survival_transient,hazard_ramp,survival_ramp\n";
        const double horizon = cfg.sigmoid.t_end;
        const long steps = static_cast<long>(std::floor(horizon / cfg.curves_step + 1e-9));
        for (long i = 0; i <= steps; ++i) {
            const double tt = std::min(horizon, cfg.curves_step * static_cast<double>(i));
            curves << fmt_axis(tt);
            for (const HazardCurve* curve : {&flat, &ep_curve, &tr_curve, &ramp})
                curves << ',' << fmt("%.10f", curve->hazard_at(tt)) << ','
                       << fmt("%.10f", curve->survival(tt));
            curves << '\n';
        }
        write_file(out_dir / "curves.csv", curves.str());

        std::ostringstream table;
        table << "maturity_years,cds_endpoint_bps,survival_endpoint_pct,cds_transient_bps,"
                 "survival_transient_pct,survival_flat_pct,cds_ramp_bps,survival_ramp_pct\n";
        for (double maturity = 10.0; maturity <= horizon + 1e-9; maturity += 10.0) {
            table << fmt_axis(maturity) << ','
                  << fmt("%.1f", 1e4 * par_spread(ep_curve, discount, maturity,
                                                  cfg.quote.recovery))
                  << ',' << fmt("%.2f", 100.0 * ep_curve.survival(maturity)) << ','
                  << fmt("%.1f", 1e4 * par_spread(tr_curve, discount, maturity,
                                                  cfg.quote.recovery))
                  << ',' << fmt("%.2f", 100.0 * tr_curve.survival(maturity)) << ','
                  << fmt("%.2f", 100.0 * flat.survival(maturity)) << ','
                  << fmt("%.1f", 1e4 * par_spread(ramp, discount, maturity,
                                                  cfg.quote.recovery))
                  << ',' << fmt("%.2f", 100.0 * ramp.survival(maturity)) << '\n';
        }
        write_file(out_dir / "cds_table.csv", table.str());
        return 0;
    } catch (const std::exception& e) {
        err = std::string("curves failed: ") + e.what();
        return 2;
    }
}

}  // namespace

void RunConfig::validate() const {
    require_sane_rate(market.discount_rate, "discount_rate");
    require_sane_rate(market.normal_vol, "normal_vol");
    require_sane_rate(market.funding_spread, "funding_spread");
    require_sane_rate(quote.spread, "cds.spread");
    require_sane_rate(scenario_h_max, "scenario.h_max");
    require_sane_rate(sigmoid.h_max, "sigmoid.h_max");
    if (market.normal_vol < 0.0) fail("normal_vol: must be >= 0");
    if (market.funding_spread < 0.0) fail("funding_spread: must be >= 0");
    if (market.grid_step <= 0.0) fail("grid_step: must be > 0");
    if (curves_step <= 0.0) fail("curves_step: must be > 0");
    try {
        quote.validate();
    } catch (const std::exception& e) {
        fail(std::string("cds: ") + e.what());
    }
    try {
        swap.validate();
    } catch (const std::exception& e) {
        fail(std::string("swap: ") + e.what());
    }
    try {
        sigmoid.validate();
    } catch (const std::exception& e) {
        fail(std::string("sigmoid: ") + e.what());
    }
    if (std::abs(sigmoid.t_start - quote.maturity) > 1e-9)
        fail("sigmoid.t_start: must equal cds.maturity (the measure switch)");
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("cannot open config file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();

    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        fail("config parse error at " + path + ":" + std::to_string(line) + ":" +
             std::to_string(column) + ": " + e.what());
    }
    return parse_config_json(j);
}

std::string resolved_config_json(const RunConfig& cfg) {
    ordered_json j;
    j["asof"] = cfg.asof;
    j["discount_rate"] = cfg.market.discount_rate;
    j["cds"] = {{"maturity", cfg.quote.maturity},
                {"spread", cfg.quote.spread},
                {"recovery", cfg.quote.recovery}};
    j["normal_vol"] = cfg.market.normal_vol;
    j["funding_spread"] = cfg.market.funding_spread;
    j["swap"] = {{"maturity", cfg.swap.maturity},
                 {"frequency", cfg.swap.pay_frequency},
                 {"notional", cfg.swap.notional}};
    j["fva_mode"] = cfg.market.fva_mode == FvaMode::Fca ? "fca" : "signed";
    j["grid_step"] = cfg.market.grid_step;
    ordered_json sig;
    sig["transient"] = cfg.sigmoid.transient;
    sig["t_start"] = cfg.sigmoid.t_start;
    if (cfg.sigmoid.h_start)
        sig["h_start"] = *cfg.sigmoid.h_start;
    else
        sig["h_start"] = nullptr;
    sig["mid"] = cfg.sigmoid.mid;
    sig["width"] = cfg.sigmoid.width;
    sig["buildup"] = cfg.sigmoid.buildup;
    sig["t_end"] = cfg.sigmoid.t_end;
    sig["h_max"] = cfg.sigmoid.h_max;
    j["sigmoid"] = sig;
    j["family"] = cfg.family;
    ordered_json scenario;
    scenario["h_max"] = cfg.scenario_h_max;
    if (!cfg.grid_widths.empty()) scenario["widths"] = cfg.grid_widths;
    if (!cfg.grid_maturities.empty()) scenario["maturities"] = cfg.grid_maturities;
    if (!cfg.grid_midpoints.empty()) scenario["midpoints"] = cfg.grid_midpoints;
    j["scenario"] = scenario;
    j["curves_step"] = cfg.curves_step;
    return j.dump(2) + "\n";
}

int run(const std::string& subcommand, const RunConfig& cfg, const std::string& out_dir,
        std::string& err) {
    try {
        cfg.validate();
        const auto start = std::chrono::steady_clock::now();

        std::error_code ec;
        fs::create_directories(out_dir, ec);
        if (ec) {
            err = "cannot create output directory " + out_dir + ": " + ec.message();
            return 2;
        }

        int status = 0;
        if (subcommand == "report")
            status = run_report(cfg, out_dir, err);
        else if (subcommand == "grid")
            status = run_grid(cfg, out_dir, err);
        else if (subcommand == "curves")
            status = run_curves(cfg, out_dir, err);
        else
            fail("unknown subcommand '" + subcommand + "' (expected report, grid or curves)");

        const double elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        write_sidecars(cfg, subcommand, out_dir, elapsed_ms);
        return status;
    } catch (const ConfigError& e) {
        err = e.what();
        return 1;
    } catch (const ComputeError& e) {
        err = e.what();
        return 2;
    }
}

}  // namespace ccva::cli
