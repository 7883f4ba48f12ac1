#include "jcm/cli/config.hpp"

#include <cmath>
#include <fstream>
#include <system_error>

#include "jcm/error.hpp"

namespace jcm::cli {

RabiMode parse_mode(const std::string& text) {
    if (text == "quadratic") return RabiMode::Quadratic;
    if (text == "exact") return RabiMode::Exact;
    throw Error(ErrorCode::InvalidArgument, "mode must be 'exact' or 'quadratic', got '" + text + "'");
}

std::string to_string(RabiMode mode) { return mode == RabiMode::Quadratic ? "quadratic" : "exact"; }

void apply_json(RunConfig& config, const nlohmann::json& j) {
    if (!j.is_object()) throw Error(ErrorCode::InvalidArgument, "config must be a JSON object");
    try {
        for (const auto& [key, value] : j.items()) {
            if (key == "nbar") config.nbar = value.get<double>();
            else if (key == "alpha_phase") config.alpha_phase = value.get<double>();
            else if (key == "k") config.k = value.get<int>();
            else if (key == "cutoff") config.cutoff = value.get<int>();
            else if (key == "mode") config.mode = parse_mode(value.get<std::string>());
            else if (key == "output_dir") config.output_dir = value.get<std::string>();
            else if (key == "tail_tol") config.tail_tol = value.get<double>();
            else throw Error(ErrorCode::InvalidArgument, "unknown config key '" + key + "'");
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidArgument, std::string("bad config value: ") + e.what());
    }
}

RunConfig load_config_file(const std::filesystem::path& path, RunConfig base) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open config file " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, "config file " + path.string() + ": " + e.what());
    }
    apply_json(base, j);
    return base;
}

nlohmann::json to_json(const RunConfig& config) {
    return {{"nbar", config.nbar},     {"alpha_phase", config.alpha_phase}, {"k", config.k},
            {"cutoff", config.cutoff}, {"mode", to_string(config.mode)},    {"tail_tol", config.tail_tol}};
}

ModelParams to_params(const RunConfig& config) {
    if (!(config.nbar >= 0.0) || !std::isfinite(config.nbar)) {
        throw Error(ErrorCode::InvalidArgument, "nbar must be finite and >= 0");
    }
    ModelParams p;
    p.k = config.k;
    p.alpha = std::polar(std::sqrt(config.nbar), config.alpha_phase);
    p.cutoff = config.cutoff;
    p.mode = config.mode;
    p.tail_tol = config.tail_tol;
    validate(p);
    return p;
}

void prepare_output_dir(const RunConfig& config) {
    std::error_code ec;
    std::filesystem::create_directories(config.output_dir, ec);
    if (ec || !std::filesystem::is_directory(config.output_dir)) {
        throw Error(ErrorCode::InvalidArgument, "output directory " + config.output_dir.string() + " is not usable");
    }
    const auto probe = config.output_dir / ".jcm_write_probe";
    {
        std::ofstream out(probe);
        if (!out) throw Error(ErrorCode::InvalidArgument, "output directory " + config.output_dir.string() + " is not writable");
    }
    std::filesystem::remove(probe, ec);
}

}  // namespace jcm::cli
