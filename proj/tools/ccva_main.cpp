#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ccva/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"ccva - counterparty valuation adjustments under climate-stressed "
                 "hazard curves"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = "out";
    std::string fva_mode;
    std::string family;
    double grid_step = 0.0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON config file (defaults apply if omitted)");
        sub->add_option("--out", out_dir, "output directory")->capture_default_str();
        sub->add_option("--fva-mode", fva_mode, "fca|signed (overrides config)");
        sub->add_option("--grid-step", grid_step, "exposure grid step in years (overrides config)");
    };

    CLI::App* report = app.add_subcommand("report", "one valuation-adjustment report");
    CLI::App* grid = app.add_subcommand("grid", "run a scenario family");
    CLI::App* curves = app.add_subcommand("curves", "dump hazard/survival/par-spread data");
    add_common(report);
    add_common(grid);
    add_common(curves);
    grid->add_option("--family", family,
                     "slowest-uniform|midpoint|transition (overrides config)");

    CLI11_PARSE(app, argc, argv);

    try {
        ccva::cli::RunConfig cfg;
        if (!config_path.empty()) cfg = ccva::cli::load_config(config_path);
        if (!fva_mode.empty()) {
            if (fva_mode == "fca")
                cfg.market.fva_mode = ccva::FvaMode::Fca;
            else if (fva_mode == "signed")
                cfg.market.fva_mode = ccva::FvaMode::Signed;
            else
                throw ccva::cli::ConfigError("--fva-mode: expected fca or signed");
        }
        if (grid_step > 0.0) cfg.market.grid_step = grid_step;
        if (!family.empty()) cfg.family = family;

        const std::string subcommand = app.get_subcommands().front()->get_name();
        std::string err;
        const int status = ccva::cli::run(subcommand, cfg, out_dir, err);
        if (status != 0) std::cerr << "ccva: " << err << '\n';
        return status;
    } catch (const ccva::cli::ConfigError& e) {
        std::cerr << "ccva: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "ccva: " << e.what() << '\n';
        return 2;
    }
}
