#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "jcm/dynamics.hpp"

namespace jcm::cli {

/// Shared settings of every subcommand. Defaults reproduce the nbar = 50
/// figures.
struct RunConfig {
    double nbar = 50.0;
    double alpha_phase = 0.0;  // alpha = sqrt(nbar) e^{i alpha_phase}
    int k = 4;
    int cutoff = 256;
    RabiMode mode = RabiMode::Quadratic;
    std::filesystem::path output_dir = ".";
    double tail_tol = kDefaultTailTolerance;
};

RabiMode parse_mode(const std::string& text);
std::string to_string(RabiMode mode);

/// Overlays the keys present in `j` onto `config`. Unknown keys are rejected.
void apply_json(RunConfig& config, const nlohmann::json& j);
RunConfig load_config_file(const std::filesystem::path& path, RunConfig base = {});

nlohmann::json to_json(const RunConfig& config);

/// Validates and converts; throws jcm::Error.
ModelParams to_params(const RunConfig& config);

/// Creates output_dir if needed; throws Error(InvalidArgument) if it cannot
/// be written.
void prepare_output_dir(const RunConfig& config);

}  // namespace jcm::cli
