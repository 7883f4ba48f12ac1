#include "jcm/serialize.hpp"

#include "jcm/error.hpp"

namespace jcm {

nlohmann::json amplitudes_to_json(std::span<const complex> amplitudes) {
    nlohmann::json re = nlohmann::json::array();
    nlohmann::json im = nlohmann::json::array();
    for (const auto& a : amplitudes) {
        re.push_back(a.real());
        im.push_back(a.imag());
    }
    return {{"cutoff", static_cast<int>(amplitudes.size()) - 1}, {"re", std::move(re)}, {"im", std::move(im)}};
}

std::vector<complex> amplitudes_from_json(const nlohmann::json& j) {
    const auto cutoff = j.at("cutoff").get<int>();
    const auto re = j.at("re").get<std::vector<double>>();
    const auto im = j.at("im").get<std::vector<double>>();
    if (cutoff < 0 || re.size() != static_cast<std::size_t>(cutoff) + 1 || im.size() != re.size()) {
        throw Error(ErrorCode::InvalidArgument, "amplitude arrays must both have cutoff + 1 entries");
    }
    std::vector<complex> out(re.size());
    for (std::size_t n = 0; n < out.size(); ++n) out[n] = {re[n], im[n]};
    return out;
}

void to_json(nlohmann::json& j, const FieldState& s) { j = amplitudes_to_json(s.amplitudes()); }

void from_json(const nlohmann::json& j, FieldState& s) { s = FieldState(amplitudes_from_json(j)); }

void to_json(nlohmann::json& j, const JointState& s) {
    j = {{"tau", s.tau}, {"k", s.k}, {"excited", amplitudes_to_json(s.excited)}, {"ground", amplitudes_to_json(s.ground)}};
}

void from_json(const nlohmann::json& j, JointState& s) {
    s.tau = j.at("tau").get<double>();
    s.k = j.at("k").get<int>();
    s.excited = amplitudes_from_json(j.at("excited"));
    s.ground = amplitudes_from_json(j.at("ground"));
    if (s.excited.size() != s.ground.size()) throw Error(ErrorCode::CutoffMismatch, "branch cutoffs differ");
}

void to_json(nlohmann::json& j, const ComponentReport& r) {
    j = {{"count", r.count}, {"threshold_fraction", r.threshold_fraction}, {"component_masses", r.component_masses}};
}

void to_json(nlohmann::json& j, const PhaseWindow& w) {
    j = {{"re_min", w.re_min}, {"re_max", w.re_max}, {"im_min", w.im_min}, {"im_max", w.im_max}};
}

void from_json(const nlohmann::json& j, PhaseWindow& w) {
    w.re_min = j.at("re_min").get<double>();
    w.re_max = j.at("re_max").get<double>();
    w.im_min = j.at("im_min").get<double>();
    w.im_max = j.at("im_max").get<double>();
}

}  // namespace jcm
