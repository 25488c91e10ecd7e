#pragma once

#include <stdexcept>
#include <string>

namespace netjunction {

// Bad scenario description: unknown fields, inconsistent parameters,
// non-commensurate meshes. Maps to CLI exit code 2.
struct config_error : std::runtime_error {
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// A numerical guarantee failed at runtime (CFL violated, flux balance
// unsolvable, out-of-range state). Maps to CLI exit code 3.
struct invariant_error : std::runtime_error {
    explicit invariant_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace netjunction
