#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "netjunction/mesh.hpp"
#include "netjunction/network.hpp"
#include "netjunction/scheme.hpp"

namespace netjunction {

enum class ReferenceKind { none, merge, junction_riemann };

// A fully validated scenario: network, initial data, resolution, and run
// horizon. Exactly one of dx / cells_per_arc and at most one of dt /
// cfl_factor is present; everything is checked at parse time, including the
// CFL admissibility of an explicit dt.
struct ScenarioConfig {
    ScenarioConfig(Network net, std::vector<PiecewiseProfile> init)
        : network(std::move(net)), initial(std::move(init)) {}

    Network network;
    std::vector<PiecewiseProfile> initial;
    std::optional<double> dx;
    std::optional<std::size_t> cells_per_arc;
    std::optional<double> dt;
    std::optional<double> cfl_factor;  // in (0, 1]; stands in for dt when dt is absent
    double t_end = 0.0;
    std::vector<double> output_times;  // defaults to {t_end}
    std::optional<std::string> output_dir;
    ReferenceKind reference = ReferenceKind::none;
};

// Strict JSON parsing: unknown fields are rejected, every diagnostic names
// the offending field path. Throws config_error.
ScenarioConfig parse_config(const std::string& text);
ScenarioConfig load_config(const std::filesystem::path& file);

// Canonical JSON text; parse(serialize(c)) reproduces c exactly.
std::string serialize_config(const ScenarioConfig& cfg);

Mesh make_mesh(const ScenarioConfig& cfg);
double pick_dt(const ScenarioConfig& cfg, const Mesh& mesh);

// Per-arc constant states, available when every arc's initial data is one
// piece spanning the whole arc; required by the junction-riemann reference.
std::vector<double> constant_states(const ScenarioConfig& cfg);

}  // namespace netjunction
