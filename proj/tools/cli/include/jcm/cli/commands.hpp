#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "jcm/catlab.hpp"
#include "jcm/cli/config.hpp"

namespace jcm::cli {

inline constexpr int kSchemaVersion = 1;

/// Evenly spaced samples from `from` to `to` inclusive; both ends are tau
/// expressions, so exact endpoints give exact sample times.
struct TimeRange {
    std::string from = "0";
    std::string to = "pi";
    int steps = 2001;
};

/// One pnd_tau_<slug>.csv per expression. Throws ParseError before writing
/// anything if any expression is malformed.
std::vector<std::filesystem::path> cmd_pnd(const RunConfig& config, const std::vector<std::string>& taus);

struct EntropyOptions {
    TimeRange range;
    /// Scan pi/4 +- halfwidth_r * delta_1 instead of `range` and write a JSON
    /// sidecar marking tau = pi/4 + r delta_1 for odd |r| <= halfwidth_r.
    bool dip_window = false;
    int halfwidth_r = 6;
    int dip_steps = 1201;
};

struct EntropyOutput {
    std::filesystem::path csv;
    std::optional<std::filesystem::path> sidecar;
};

EntropyOutput cmd_entropy(const RunConfig& config, const EntropyOptions& options);

struct QfuncOptions {
    std::string tau = "0";
    PhaseWindow window;
    int nx = 241;
    int ny = 241;
    double threshold_fraction = kDefaultComponentThreshold;
};

struct QfuncOutput {
    std::filesystem::path csv;
    std::filesystem::path sidecar;
    ComponentReport components;
    double riemann_sum = 0.0;
};

QfuncOutput cmd_qfunc(const RunConfig& config, const QfuncOptions& options);

/// inversion.csv with columns tau,w.
std::filesystem::path cmd_inversion(const RunConfig& config, const TimeRange& range);

struct CatcheckOutput {
    std::filesystem::path report;
    nlohmann::json dossier;
};

/// Fidelities, entropies and atomic coherences at the special times for dip
/// index r, written to catcheck_r<r>.json. Throws EvenR.
CatcheckOutput cmd_catcheck(const RunConfig& config, int r);

}  // namespace jcm::cli
