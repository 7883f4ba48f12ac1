#include "jcm/cli/commands.hpp"

#include <cmath>
#include <sstream>

#include "jcm/cli/format.hpp"
#include "jcm/cli/tau_expr.hpp"
#include "jcm/error.hpp"
#include "jcm/serialize.hpp"

namespace jcm::cli {
namespace {

std::vector<Radians> sample_times(const TimeRange& range) {
    if (range.steps < 2) throw Error(ErrorCode::InvalidArgument, "steps must be >= 2");
    const Radians from = parse_tau(range.from);
    const Radians to = parse_tau(range.to);
    std::vector<Radians> out;
    out.reserve(static_cast<std::size_t>(range.steps));
    for (int i = 0; i < range.steps; ++i) out.push_back(Radians::lerp(from, to, i, range.steps - 1));
    return out;
}

nlohmann::json tau_json(const std::string& expression, const Radians& tau) {
    nlohmann::json j = {{"expression", expression}, {"value", tau.value()}};
    if (const auto& pm = tau.pi_multiple()) j["pi_multiple"] = {pm->num, pm->den};
    return j;
}

nlohmann::json complex_json(complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

double entropy_at(const ModelParams& params, const Radians& tau) { return entropy(atom_density(evolve(params, tau))); }

}  // namespace

std::vector<std::filesystem::path> cmd_pnd(const RunConfig& config, const std::vector<std::string>& taus) {
    const ModelParams params = to_params(config);
    if (taus.empty()) throw Error(ErrorCode::InvalidArgument, "at least one --tau is required");
    std::vector<Radians> parsed;
    for (const auto& t : taus) parsed.push_back(parse_tau(t));
    prepare_output_dir(config);

    std::vector<std::filesystem::path> written;
    for (std::size_t i = 0; i < taus.size(); ++i) {
        std::ostringstream csv;
        write_pnd_csv(csv, pnd(evolve(params, parsed[i])));
        const auto path = config.output_dir / ("pnd_tau_" + slug(taus[i]) + ".csv");
        write_text_file(path, csv.str());
        written.push_back(path);
    }
    return written;
}

EntropyOutput cmd_entropy(const RunConfig& config, const EntropyOptions& options) {
    const ModelParams params = to_params(config);
    prepare_output_dir(config);
    EntropyOutput out;

    if (!options.dip_window) {
        const auto times = sample_times(options.range);
        std::vector<double> tau(times.size());
        std::vector<double> s(times.size());
#pragma omp parallel for schedule(static)
        for (std::size_t i = 0; i < times.size(); ++i) {
            tau[i] = times[i].value();
            s[i] = entropy_at(params, times[i]);
        }
        std::ostringstream csv;
        write_series_csv(csv, "tau", "entropy", tau, s);
        out.csv = config.output_dir / "entropy.csv";
        write_text_file(out.csv, csv.str());
        return out;
    }

    if (options.halfwidth_r < 1) throw Error(ErrorCode::InvalidArgument, "dip halfwidth must be >= 1");
    const DipOffset d1 = dip_offset(1, config.nbar);
    const Radians center = Radians::pi_times(1, 4);
    const DipScan scan = entropy_dip_scan(params, center, d1.delta.times(options.halfwidth_r), options.dip_steps);

    std::ostringstream csv;
    write_series_csv(csv, "tau", "entropy", scan.tau, scan.entropy);
    out.csv = config.output_dir / "entropy_dip.csv";
    write_text_file(out.csv, csv.str());

    nlohmann::json lines = nlohmann::json::array();
    for (int r = -options.halfwidth_r; r <= options.halfwidth_r; ++r) {
        if (r % 2 == 0) continue;
        const double tau = (center + dip_offset(r, config.nbar).delta).value();
        nlohmann::json line = {{"r", r}, {"tau", tau}};
        if (!scan.minima.empty()) {
            const auto near = nearest_minimum(scan, tau);
            line["nearest_minimum_tau"] = scan.tau[near.index];
            line["nearest_minimum_entropy"] = scan.entropy[near.index];
            line["distance_in_steps"] = near.distance_in_steps;
        }
        lines.push_back(std::move(line));
    }
    nlohmann::json minima = nlohmann::json::array();
    for (auto idx : scan.minima) minima.push_back({{"tau", scan.tau[idx]}, {"entropy", scan.entropy[idx]}});

    const nlohmann::json sidecar = {{"schema_version", kSchemaVersion},
                                    {"config", to_json(config)},
                                    {"center", scan.tau[scan.tau.size() / 2]},
                                    {"delta1", d1.delta.value()},
                                    {"step", scan.step()},
                                    {"r_lines", std::move(lines)},
                                    {"minima", std::move(minima)}};
    out.sidecar = config.output_dir / "entropy_dip.json";
    write_json_file(*out.sidecar, sidecar);
    return out;
}

QfuncOutput cmd_qfunc(const RunConfig& config, const QfuncOptions& options) {
    const ModelParams params = to_params(config);
    const Radians tau = parse_tau(options.tau);
    const PhaseGrid grid = q_grid(field_rank2(evolve(params, tau)), options.window, options.nx, options.ny);
    prepare_output_dir(config);

    QfuncOutput out;
    out.components = count_components(grid, options.threshold_fraction);
    out.riemann_sum = grid.riemann_sum();

    std::ostringstream csv;
    write_grid_csv(csv, grid);
    const std::string stem = "qfunc_tau_" + slug(options.tau);
    out.csv = config.output_dir / (stem + ".csv");
    write_text_file(out.csv, csv.str());

    const nlohmann::json sidecar = {{"schema_version", kSchemaVersion},
                                    {"config", to_json(config)},
                                    {"tau", tau_json(options.tau, tau)},
                                    {"window", options.window},
                                    {"nx", grid.nx},
                                    {"ny", grid.ny},
                                    {"riemann_sum", out.riemann_sum},
                                    {"components", out.components}};
    out.sidecar = config.output_dir / (stem + ".json");
    write_json_file(out.sidecar, sidecar);
    return out;
}

std::filesystem::path cmd_inversion(const RunConfig& config, const TimeRange& range) {
    const ModelParams params = to_params(config);
    const auto times = sample_times(range);
    prepare_output_dir(config);
    std::vector<double> tau(times.size());
    std::vector<double> w(times.size());
    (void)initial_field(params);
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < times.size(); ++i) {
        tau[i] = times[i].value();
        w[i] = atomic_inversion(params, times[i]);
    }
    std::ostringstream csv;
    write_series_csv(csv, "tau", "w", tau, w);
    const auto path = config.output_dir / "inversion.csv";
    write_text_file(path, csv.str());
    return path;
}

CatcheckOutput cmd_catcheck(const RunConfig& config, int r) {
    const ModelParams params = to_params(config);
    const DipOffset offset = dip_offset(r, config.nbar);
    prepare_output_dir(config);
    const int cutoff = params.cutoff;
    const complex alpha = params.alpha;

    const Radians full = Radians::pi_times(1);
    const JointState at_full = evolve(params, full);
    const FieldState coherent = coherent_state(alpha, cutoff, params.tail_tol).state;
    const nlohmann::json recurrence = {
        {"tau", full.value()},
        {"fidelity_excited_vs_coherent", fidelity(post_selected_field(at_full, Outcome::Excited), coherent)},
        {"entropy", entropy(atom_density(at_full))}};

    const Radians half = Radians::pi_times(1, 2);
    const JointState at_half = evolve(params, half);
    const nlohmann::json kerr = {
        {"tau", half.value()},
        {"fidelity_ground_downshifted_vs_kerr",
         fidelity(post_selected_field(at_half, Outcome::Ground, true), expected_kerr_state(alpha, cutoff, params.tail_tol))},
        {"entropy", entropy(atom_density(at_half))}};

    const Radians quarter = Radians::pi_times(1, 4);
    const Radians dip_tau = quarter + offset.delta;
    const JointState at_dip = evolve(params, dip_tau);
    const AtomDensity rho = atom_density(at_dip);
    const CatState cat = expected_cat_state(alpha, offset, cutoff, params.tail_tol);
    const complex predicted = -0.5 * std::polar(1.0, 4.0 * std::arg(alpha));
    const long n_ref = std::lround(config.nbar);

    nlohmann::json cat_json = {
        {"tau", dip_tau.value()},
        {"delta", offset.delta.value()},
        {"entropy", entropy(rho)},
        {"entropy_at_quarter", entropy_at(params, quarter)},
        {"field_purity", purity(field_rank2(at_dip))},
        {"raw_norm", cat.raw_norm},
        {"fidelity_ground_downshifted", fidelity(post_selected_field(at_dip, Outcome::Ground, true), cat.state)},
        {"fidelity_excited", fidelity(post_selected_field(at_dip, Outcome::Excited), cat.state)},
        {"fidelity_excited_vs_ground", fidelity(post_selected_field(at_dip, Outcome::Excited),
                                                post_selected_field(at_dip, Outcome::Ground))},
        {"dip_phase_mismatch_at_nbar", dip_phase_mismatch(n_ref, offset)}};

    const nlohmann::json atom = {{"rho11", rho.rho11},
                                 {"rho22", rho.rho22},
                                 {"rho12", complex_json(rho.rho12)},
                                 {"stripped_coherence", complex_json(stripped_coherence(rho))},
                                 {"predicted_stripped_coherence", complex_json(predicted)},
                                 {"coherence_error", std::abs(stripped_coherence(rho) - predicted)}};

    CatcheckOutput out;
    out.dossier = {{"schema_version", kSchemaVersion},
                   {"config", to_json(config)},
                   {"r", r},
                   {"coherent_recurrence", recurrence},
                   {"kerr_half_period", kerr},
                   {"kerr_cat", std::move(cat_json)},
                   {"atom_at_dip", atom}};
    out.report = config.output_dir / ("catcheck_r" + std::to_string(r) + ".json");
    write_json_file(out.report, out.dossier);
    return out;
}

}  // namespace jcm::cli
