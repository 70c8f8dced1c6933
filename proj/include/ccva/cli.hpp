#pragma once

#include <stdexcept>
#include <string>

#include "ccva/scenarios.hpp"
#include "ccva/xva.hpp"

namespace ccva::cli {

/// Config file or flag problem; exits with status 1.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Valuation failed; exits with status 2.
struct ComputeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Fully resolved run configuration. Defaults reproduce the reference
/// setup, so an empty config file (or none) is a valid run.
struct RunConfig {
    std::string asof = "2020-01-29";
    CdsQuote quote{10.0, 0.0100, 0.40};
    MarketConfig market{};
    SwapSpec swap{30.0, 1, 1.0, true};
    SigmoidParams sigmoid{};          // report/curves subcommands
    std::string family = "slowest-uniform";  // grid subcommand
    double scenario_h_max = 0.25;

    // optional axis overrides for the grid subcommand
    std::vector<double> grid_widths;      // empty = family default
    std::vector<double> grid_maturities;  // empty = family default
    std::vector<double> grid_midpoints;   // empty = family default

    double curves_step = 1.0;  // sampling step for the curves subcommand

    void validate() const;  // throws ConfigError naming the field
};

/// Parse a JSON config file. Unknown keys and malformed values raise
/// ConfigError with the offending field (or parse position) in the message.
RunConfig load_config(const std::string& path);

/// The resolved config as canonical JSON (fixed key order); written next to
/// the outputs so a run can be reproduced exactly.
std::string resolved_config_json(const RunConfig& config);

/// Run one subcommand ("report", "grid" or "curves") writing CSV outputs
/// into `out_dir`. Returns the process exit status (0 ok; 1 config error;
/// 2 compute error). Diagnostics go to `err`.
int run(const std::string& subcommand, const RunConfig& config,
        const std::string& out_dir, std::string& err);

}  // namespace ccva::cli
