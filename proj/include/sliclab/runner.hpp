#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sliclab/config.hpp"

namespace slic {

struct CheckResult {
    std::string name;
    std::string status;   // "pass" | "fail" | "sentinel"
    double value = 0.0;
    double target = 0.0;
    std::string note;
};

struct RunManifest {
    std::string kind;
    std::map<std::string, std::string> config_echo;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;
    std::vector<std::string> artifacts;
    double wall_seconds = 0.0;

    bool all_ok() const;   // no non-sentinel failures
    std::string to_json() const;
    static RunManifest from_json_file(const std::string& path);
};

/// Executes the configured experiment (crack1d | cavity3d | vacuum), writes
/// CSV/JSON artifacts into out_dir, and returns the manifest (also written
/// as manifest.json).
RunManifest run_experiment(const Config& config, const std::string& out_dir);

/// Derives plot-ready tables (fan profiles at fixed t, residual log-log
/// tables, energy-vs-t tables) from a manifest and its artifacts.
std::vector<std::string> emit_plot_data(const std::string& manifest_path);

/// Check names required per experiment kind (manifest completeness).
const std::vector<std::string>& required_checks(const std::string& kind);

} // namespace slic
