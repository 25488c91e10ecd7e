#pragma once

#include <filesystem>
#include <vector>

#include "netjunction/analysis.hpp"
#include "netjunction/config.hpp"

namespace netjunction {

// Reference evaluator declared by the config; config_error when none is set.
ExactDensity make_reference(const ScenarioConfig& cfg);

struct ScenarioOutcome {
    Mesh mesh;
    double dt;
    RunResult run;
    std::vector<ErrorReport> reports;  // one per snapshot when a reference is set
};

ScenarioOutcome run_scenario(const ScenarioConfig& cfg);
void write_scenario_outputs(const ScenarioConfig& cfg, const ScenarioOutcome& outcome,
                            const std::filesystem::path& dir);

// Runs the 1-1 network scenario and its junction-free twin: one interval of
// the combined length, same flux, dx and dt, initial data shifted so the
// junction sits mid-domain. Records the cellwise gap at every output time.
struct ShiftOutcome {
    Mesh mesh;
    double dt;
    RunResult network_run;
    std::vector<std::vector<double>> line_states;  // per output time
    std::vector<double> times;
    std::vector<double> max_diffs;
};

ShiftOutcome run_paired_shift(const ScenarioConfig& cfg);
void write_shift_outputs(const ScenarioConfig& cfg, const ShiftOutcome& outcome,
                         const std::filesystem::path& dir);

// Re-runs the scenario once per requested resolution (cells per arc,
// strictly increasing) with everything else fixed, reporting the error at
// t_end against the scenario's reference. Rows are computed by a small
// worker pool (capped by NETJUNCTION_THREADS) and kept in ladder order.
std::vector<ErrorReport> run_convergence(const ScenarioConfig& base,
                                         const std::vector<std::size_t>& cells);
void write_convergence_outputs(const std::vector<ErrorReport>& reports,
                               const std::filesystem::path& dir);

unsigned worker_cap();

}  // namespace netjunction
