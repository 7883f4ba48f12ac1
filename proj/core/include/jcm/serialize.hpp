#pragma once

// JSON mappings (nlohmann ADL hooks) for the library types.
//
//   FieldState      {"cutoff": N, "re": [...], "im": [...]}
//   JointState      {"tau": t, "k": k, "excited": FieldState-like, "ground": FieldState-like}
//   ComponentReport {"count", "threshold_fraction", "component_masses"}
//   PhaseWindow     {"re_min", "re_max", "im_min", "im_max"}

#include <nlohmann/json.hpp>

#include "jcm/catlab.hpp"
#include "jcm/fock.hpp"
#include "jcm/observables.hpp"

namespace jcm {

nlohmann::json amplitudes_to_json(std::span<const complex> amplitudes);
std::vector<complex> amplitudes_from_json(const nlohmann::json& j);

void to_json(nlohmann::json& j, const FieldState& s);
void from_json(const nlohmann::json& j, FieldState& s);

void to_json(nlohmann::json& j, const JointState& s);
void from_json(const nlohmann::json& j, JointState& s);

void to_json(nlohmann::json& j, const ComponentReport& r);
void to_json(nlohmann::json& j, const PhaseWindow& w);
void from_json(const nlohmann::json& j, PhaseWindow& w);

}  // namespace jcm
