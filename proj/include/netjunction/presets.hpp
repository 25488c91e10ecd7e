#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace netjunction {

enum class PresetKind { scenario, paired_shift, convergence };

struct PresetInfo {
    std::string name;
    std::string file;  // config file name inside the preset directory
    PresetKind kind;
};

const std::vector<PresetInfo>& preset_registry();

// Lookup by name; throws config_error listing the valid names when missing.
const PresetInfo& find_preset(const std::string& name);

// Directory holding the preset config files: NETJUNCTION_PRESET_DIR from the
// environment when set, otherwise the location compiled in at build time.
std::filesystem::path preset_dir();

}  // namespace netjunction
