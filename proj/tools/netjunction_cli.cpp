#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "netjunction/driver.hpp"
#include "netjunction/errors.hpp"
#include "netjunction/presets.hpp"

namespace {

using namespace netjunction;

void print_report(const ErrorReport& r) {
    auto show = [](const std::optional<double>& v) {
        return v ? std::to_string(*v) : std::string("undefined");
    };
    std::printf("t=%g cells_per_arc=%zu err_network=%s err_incoming=%s err_outgoing=%s\n",
                r.time, r.cells_per_arc, show(r.whole).c_str(), show(r.incoming).c_str(),
                show(r.outgoing).c_str());
}

void warn_boundary(bool touched) {
    if (touched)
        std::fprintf(stderr,
                     "warning: a wave reached an outer arc end before t_end; the "
                     "zero-gradient closure is active in the results\n");
}

int do_scenario(const ScenarioConfig& cfg, const std::filesystem::path& out) {
    ScenarioOutcome outcome = run_scenario(cfg);
    write_scenario_outputs(cfg, outcome, out);
    warn_boundary(outcome.run.boundary_touched);
    for (const ErrorReport& r : outcome.reports) print_report(r);
    std::printf("wrote %zu snapshot(s) to %s\n", outcome.run.snapshots.size(),
                out.string().c_str());
    return 0;
}

int do_paired_shift(const ScenarioConfig& cfg, const std::filesystem::path& out) {
    ShiftOutcome outcome = run_paired_shift(cfg);
    write_shift_outputs(cfg, outcome, out);
    warn_boundary(outcome.network_run.boundary_touched);
    for (std::size_t i = 0; i < outcome.times.size(); ++i)
        std::printf("t=%g max_abs_diff=%.3e\n", outcome.times[i], outcome.max_diffs[i]);
    std::printf("wrote shift report to %s\n", out.string().c_str());
    return 0;
}

int do_convergence(const ScenarioConfig& base, const std::vector<std::size_t>& cells,
                   const std::filesystem::path& out) {
    std::vector<ErrorReport> reports = run_convergence(base, cells);
    write_convergence_outputs(reports, out);
    for (const ErrorReport& r : reports) print_report(r);
    std::printf("wrote table1.csv to %s\n", out.string().c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-volume simulation of traffic networks joined at one junction"};
    app.require_subcommand(1);

    std::string config_path, preset_name, out_dir;
    bool full = false;
    std::vector<std::size_t> cells = {60, 120, 600, 1200};

    CLI::App* sim = app.add_subcommand("simulate", "Run a scenario config file");
    sim->add_option("config", config_path, "scenario config (JSON)")->required();
    sim->add_option("--out", out_dir, "output directory")->required();

    CLI::App* pre = app.add_subcommand("preset", "Run a named preset");
    pre->add_option("name", preset_name, "preset name")->required();
    pre->add_option("--out", out_dir, "output directory")->required();
    pre->add_flag("--full", full, "include the slow 6000/12000-cell resolutions");

    CLI::App* conv = app.add_subcommand("convergence", "Run the resolution ladder");
    conv->add_option("--cells", cells, "cells per arc, ascending")->delimiter(',');
    conv->add_option("--out", out_dir, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sim->parsed()) return do_scenario(load_config(config_path), out_dir);
        if (conv->parsed())
            return do_convergence(load_config(preset_dir() / find_preset("merge-explicit").file),
                                  cells, out_dir);
        const PresetInfo& info = find_preset(preset_name);
        ScenarioConfig cfg = load_config(preset_dir() / info.file);
        switch (info.kind) {
            case PresetKind::scenario:
                return do_scenario(cfg, out_dir);
            case PresetKind::paired_shift:
                return do_paired_shift(cfg, out_dir);
            case PresetKind::convergence: {
                std::vector<std::size_t> ladder = {60, 120, 600, 1200};
                if (full) {
                    ladder.push_back(6000);
                    ladder.push_back(12000);
                }
                return do_convergence(cfg, ladder, out_dir);
            }
        }
        return 1;
    } catch (const config_error& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const invariant_error& e) {
        std::fprintf(stderr, "invariant violation: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
