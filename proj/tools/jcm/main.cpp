// jcm: data sets for the four-photon Jaynes-Cummings model.
//
//   jcm pnd --tau 0,pi/8,pi/8-pi/24000,pi/4
//   jcm entropy [--from 0 --to pi --steps 2001] [--dip]
//   jcm qfunc --tau pi/4+pi/800 [--window -12,12,-12,12] [--resolution 241]
//   jcm inversion [--from 0 --to pi/2 --steps 20001]
//   jcm catcheck --r 1
//
// Exit status: 0 on success, 2 on any validation or parse error.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "jcm/cli/commands.hpp"
#include "jcm/cli/config.hpp"
#include "jcm/error.hpp"

namespace {

constexpr int kValidationExit = 2;

struct CommonFlags {
    std::optional<double> nbar;
    std::optional<double> alpha_phase;
    std::optional<int> k;
    std::optional<int> cutoff;
    std::optional<std::string> mode;
    std::optional<std::string> out;
    std::optional<std::string> config;
    std::optional<double> tail_tol;
};

void add_common(CLI::App* sub, CommonFlags& f) {
    sub->add_option("--nbar", f.nbar, "Mean photon number of the initial coherent state (default 50)");
    sub->add_option("--phase", f.alpha_phase, "Phase of alpha in radians (default 0)");
    sub->add_option("--k", f.k, "Photon multiplicity (default 4)");
    sub->add_option("--cutoff", f.cutoff, "Fock cutoff N (default 256)");
    sub->add_option("--mode", f.mode, "Rabi frequencies: exact|quadratic (default quadratic)");
    sub->add_option("--out", f.out, "Output directory (default .)");
    sub->add_option("--config", f.config, "JSON config file; flags override its values");
    sub->add_option("--tail-tol", f.tail_tol, "Largest tolerated Poisson tail above the cutoff (default 1e-9)");
}

jcm::cli::RunConfig resolve(const CommonFlags& f) {
    jcm::cli::RunConfig c;
    if (f.config) c = jcm::cli::load_config_file(*f.config, c);
    if (f.nbar) c.nbar = *f.nbar;
    if (f.alpha_phase) c.alpha_phase = *f.alpha_phase;
    if (f.k) c.k = *f.k;
    if (f.cutoff) c.cutoff = *f.cutoff;
    if (f.mode) c.mode = jcm::cli::parse_mode(*f.mode);
    if (f.out) c.output_dir = *f.out;
    if (f.tail_tol) c.tail_tol = *f.tail_tol;
    return c;
}

void add_range(CLI::App* sub, jcm::cli::TimeRange& range) {
    sub->add_option("--from", range.from, "First sample time (tau expression)")->capture_default_str();
    sub->add_option("--to", range.to, "Last sample time (tau expression)")->capture_default_str();
    sub->add_option("--steps", range.steps, "Number of samples, >= 2")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Four-photon Jaynes-Cummings model: photon statistics, entropy, Q-function, inversion"};
    app.require_subcommand(1);

    CommonFlags flags;

    std::vector<std::string> pnd_taus;
    auto* pnd = app.add_subcommand("pnd", "Photon-number distribution, one CSV per time");
    add_common(pnd, flags);
    pnd->add_option("--tau", pnd_taus, "Times, e.g. 0,pi/8,pi/8-pi/24000")->delimiter(',')->required();

    jcm::cli::EntropyOptions entropy_opts;
    auto* entropy = app.add_subcommand("entropy", "Field entropy against tau");
    add_common(entropy, flags);
    add_range(entropy, entropy_opts.range);
    entropy->add_flag("--dip", entropy_opts.dip_window, "Scan pi/4 +- halfwidth*delta_1 and annotate r lines");
    entropy->add_option("--dip-halfwidth", entropy_opts.halfwidth_r, "Dip window half-width in units of delta_1")
        ->capture_default_str();
    entropy->add_option("--dip-steps", entropy_opts.dip_steps, "Samples in the dip window")->capture_default_str();

    jcm::cli::QfuncOptions q_opts;
    std::vector<double> window;
    int resolution = 0;
    auto* qfunc = app.add_subcommand("qfunc", "Husimi Q-function grid and component count");
    add_common(qfunc, flags);
    qfunc->add_option("--tau", q_opts.tau, "Time (tau expression)")->capture_default_str();
    qfunc->add_option("--window", window, "re_min,re_max,im_min,im_max")->delimiter(',')->expected(4);
    qfunc->add_option("--resolution", resolution, "Points per axis (default 241)");
    qfunc->add_option("--threshold", q_opts.threshold_fraction, "Component threshold as a fraction of the peak")
        ->capture_default_str();

    jcm::cli::TimeRange inversion_range{"0", "pi/2", 20001};
    auto* inversion = app.add_subcommand("inversion", "Atomic population inversion against tau");
    add_common(inversion, flags);
    add_range(inversion, inversion_range);

    int r = 1;
    auto* catcheck = app.add_subcommand("catcheck", "Kerr and Kerr-cat diagnostics as a JSON report");
    add_common(catcheck, flags);
    catcheck->add_option("--r", r, "Odd dip index r")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kValidationExit;
    }

    try {
        const jcm::cli::RunConfig config = resolve(flags);
        if (pnd->parsed()) {
            for (const auto& path : jcm::cli::cmd_pnd(config, pnd_taus)) std::cout << path.string() << '\n';
        } else if (entropy->parsed()) {
            const auto out = jcm::cli::cmd_entropy(config, entropy_opts);
            std::cout << out.csv.string() << '\n';
            if (out.sidecar) std::cout << out.sidecar->string() << '\n';
        } else if (qfunc->parsed()) {
            if (!window.empty()) q_opts.window = {window[0], window[1], window[2], window[3]};
            if (resolution != 0) q_opts.nx = q_opts.ny = resolution;
            const auto out = jcm::cli::cmd_qfunc(config, q_opts);
            std::cout << out.csv.string() << '\n'
                      << out.sidecar.string() << '\n'
                      << "components " << out.components.count << ", riemann sum " << out.riemann_sum << '\n';
        } else if (inversion->parsed()) {
            std::cout << jcm::cli::cmd_inversion(config, inversion_range).string() << '\n';
        } else if (catcheck->parsed()) {
            const auto out = jcm::cli::cmd_catcheck(config, r);
            std::cout << out.report.string() << '\n';
        }
    } catch (const jcm::Error& e) {
        std::cerr << "jcm: " << e.what() << '\n';
        return kValidationExit;
    } catch (const std::exception& e) {
        std::cerr << "jcm: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
