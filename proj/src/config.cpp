#include "mexpart/config.hpp"

#include <cstdlib>
#include <fstream>

#include "mexpart/errors.hpp"

namespace mexpart {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

EngineConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open config file: " + path);
    EngineConfig config;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw Error("config line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "enumeration_cap")
                config.enumeration_cap = std::stol(value);
            else if (key == "default_trunc")
                config.default_trunc = static_cast<std::size_t>(std::stoul(value));
            else if (key == "threads")
                config.threads = std::stoi(value);
            else
                throw Error("config line " + std::to_string(lineno) + ": unknown key '" + key +
                            "'");
        } catch (const std::invalid_argument&) {
            throw Error("config line " + std::to_string(lineno) + ": bad value for '" + key + "'");
        }
    }
    return config;
}

EngineConfig apply_env_overrides(EngineConfig config) {
    if (const char* threads = std::getenv("MEXPART_THREADS")) {
        try {
            config.threads = std::stoi(threads);
        } catch (const std::exception&) {
            throw Error("MEXPART_THREADS is not an integer");
        }
    }
    return config;
}

}  // namespace mexpart
