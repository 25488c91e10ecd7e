#include "netjunction/presets.hpp"

#include <cstdlib>

#include "netjunction/errors.hpp"

#ifndef NETJUNCTION_PRESET_DIR
#define NETJUNCTION_PRESET_DIR "presets"
#endif

namespace netjunction {

const std::vector<PresetInfo>& preset_registry() {
    static const std::vector<PresetInfo> registry = {
        {"merge-explicit", "merge-explicit.json", PresetKind::scenario},
        {"riemann-2-1-a", "riemann-2-1-a.json", PresetKind::scenario},
        {"riemann-2-1-b", "riemann-2-1-b.json", PresetKind::scenario},
        {"riemann-1-2-a", "riemann-1-2-a.json", PresetKind::scenario},
        {"riemann-1-2-b", "riemann-1-2-b.json", PresetKind::scenario},
        {"riemann-2-2-a", "riemann-2-2-a.json", PresetKind::scenario},
        {"riemann-2-2-b", "riemann-2-2-b.json", PresetKind::scenario},
        {"single-arc-consistency", "single-arc-consistency.json", PresetKind::paired_shift},
        {"convergence-table", "merge-explicit.json", PresetKind::convergence},
    };
    return registry;
}

const PresetInfo& find_preset(const std::string& name) {
    for (const PresetInfo& p : preset_registry())
        if (p.name == name) return p;
    std::string msg = "unknown preset \"" + name + "\"; valid names:";
    for (const PresetInfo& p : preset_registry()) msg += " " + p.name;
    throw config_error(msg);
}

std::filesystem::path preset_dir() {
    if (const char* env = std::getenv("NETJUNCTION_PRESET_DIR")) return env;
    return NETJUNCTION_PRESET_DIR;
}

}  // namespace netjunction
