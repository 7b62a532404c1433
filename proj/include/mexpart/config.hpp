#pragma once

#include <cstddef>
#include <string>

namespace mexpart {

inline constexpr const char* kEngineVersion = "0.1.0";

// Runtime knobs, loadable from a key = value config file. MEXPART_THREADS in
// the environment overrides the thread count.
struct EngineConfig {
    long enumeration_cap = 120;
    std::size_t default_trunc = 300;
    int threads = 1;
};

EngineConfig load_config(const std::string& path);      // throws Error on bad syntax
EngineConfig apply_env_overrides(EngineConfig config);  // MEXPART_THREADS

}  // namespace mexpart
