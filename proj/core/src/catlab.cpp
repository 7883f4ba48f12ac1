#include "jcm/catlab.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <numbers>
#include <string>

#include "jcm/error.hpp"

namespace jcm {

DipOffset dip_offset(int r, double nbar) {
    if (r % 2 == 0) throw Error(ErrorCode::EvenR, "dip index r must be odd, got " + std::to_string(r));
    if (!(nbar > 0.0) || !std::isfinite(nbar)) throw Error(ErrorCode::InvalidArgument, "nbar must be > 0");
    DipOffset out;
    out.r = r;
    out.nbar = nbar;
    if (nbar == std::floor(nbar) && nbar < 1e12) {
        out.delta = Radians::pi_times(r, 16 * static_cast<std::int64_t>(nbar));
    } else {
        out.delta = Radians(r * std::numbers::pi / (16.0 * nbar));
    }
    return out;
}

double dip_phase_mismatch(long n, const DipOffset& offset) {
    const Radians tau = Radians::pi_times(1, 4) + offset.delta;
    const std::int64_t gap = quadratic_rabi_frequency(n) - quadratic_rabi_frequency(n - 4);
    // Phase in units of pi, reduced modulo 1.
    double frac = 0.0;
    if (const auto& pm = tau.pi_multiple()) {
        const Rational t = Rational{gap, 1} * *pm;
        std::int64_t rem = t.num % t.den;
        if (rem < 0) rem += t.den;
        frac = static_cast<double>(rem) / static_cast<double>(t.den);
    } else {
        frac = std::fmod(static_cast<double>(gap) * tau.value() / std::numbers::pi, 1.0);
        if (frac < 0.0) frac += 1.0;
    }
    return (frac - 0.5) * std::numbers::pi;
}

FieldState expected_kerr_state(complex alpha, int cutoff, double tail_tol) {
    return kerr_state(-alpha, Radians::pi_times(1), cutoff, tail_tol);
}

CatState expected_cat_state(complex alpha, const DipOffset& offset, int cutoff, double tail_tol) {
    const Radians& delta = offset.delta;
    const Radians tau = Radians::pi_times(1, 4) + delta;
    const Radians gamma = Radians::pi_times(1, 2) + delta.times(2);

    const complex alpha_plus = alpha * cis(1, Radians::pi_times(-1, 2) + delta.times(6));
    const complex alpha_minus = alpha * cis(1, Radians::pi_times(1, 2) - delta.times(6));
    const FieldState plus = kerr_state(alpha_plus, gamma, cutoff, tail_tol);
    const FieldState minus = kerr_state(alpha_minus, -gamma, cutoff, tail_tol);
    const complex phase_plus = cis(5, tau);
    const complex phase_minus = std::conj(phase_plus);

    std::vector<complex> amps(plus.size());
    for (std::size_t n = 0; n < amps.size(); ++n) {
        amps[n] = (phase_plus * plus[n] - phase_minus * minus[n]) / std::numbers::sqrt2;
    }
    FieldState raw(std::move(amps));
    const double raw_norm = std::sqrt(raw.norm_squared());
    return {raw.normalized(), raw_norm};
}

FieldState post_selected_field(const JointState& state, Outcome outcome, bool downshift) {
    std::vector<complex> amps = outcome == Outcome::Excited ? state.excited : state.ground;
    if (outcome == Outcome::Ground && downshift) {
        const auto k = static_cast<std::size_t>(state.k);
        std::vector<complex> shifted(amps.size(), complex{});
        for (std::size_t n = k; n < amps.size(); ++n) shifted[n - k] = amps[n];
        amps = std::move(shifted);
    }
    FieldState raw(std::move(amps));
    const double prob = raw.norm_squared();
    if (prob <= 1e-12) {
        throw Error(ErrorCode::NegligibleBranch, "branch probability " + std::to_string(prob) + " is negligible");
    }
    return raw.normalized();
}

DipScan entropy_dip_scan(const ModelParams& params, const Radians& center, const Radians& halfwidth, int steps) {
    if (steps < 3) throw Error(ErrorCode::InvalidArgument, "dip scan needs at least 3 steps");
    validate(params);
    const Radians lo = center - halfwidth;
    const Radians hi = center + halfwidth;
    std::vector<Radians> grid;
    grid.reserve(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) grid.push_back(Radians::lerp(lo, hi, i, steps - 1));
    // Build the coherent state once so per-point work cannot throw inside the
    // parallel region.
    (void)initial_field(params);

    DipScan scan;
    scan.tau.resize(grid.size());
    scan.entropy.resize(grid.size());
#pragma omp parallel for schedule(static)
    for (int i = 0; i < steps; ++i) {
        scan.tau[i] = grid[i].value();
        scan.entropy[i] = entropy(atom_density(evolve(params, grid[i])));
    }
    for (std::size_t i = 1; i + 1 < scan.entropy.size(); ++i) {
        if (scan.entropy[i] < scan.entropy[i - 1] && scan.entropy[i] < scan.entropy[i + 1]) scan.minima.push_back(i);
    }
    return scan;
}

MinimumAlignment nearest_minimum(const DipScan& scan, double tau) {
    if (scan.minima.empty()) throw Error(ErrorCode::InvalidArgument, "scan has no local minima");
    MinimumAlignment best{scan.minima.front(), std::abs(scan.tau[scan.minima.front()] - tau)};
    for (std::size_t idx : scan.minima) {
        const double d = std::abs(scan.tau[idx] - tau);
        if (d < best.distance_in_steps) best = {idx, d};
    }
    best.distance_in_steps /= scan.step();
    return best;
}

ComponentReport count_components(const PhaseGrid& grid, double threshold_fraction) {
    if (grid.values.empty() || grid.nx <= 0 || grid.ny <= 0) throw Error(ErrorCode::EmptyGrid, "grid has no values");
    if (!(threshold_fraction > 0.0 && threshold_fraction < 1.0)) {
        throw Error(ErrorCode::InvalidArgument, "threshold_fraction must lie in (0, 1)");
    }
    ComponentReport report;
    report.threshold_fraction = threshold_fraction;
    const double peak = *std::max_element(grid.values.begin(), grid.values.end());
    if (!(peak > 0.0)) return report;
    const double threshold = threshold_fraction * peak;
    const double cell = grid.dx() * grid.dy();

    std::vector<char> seen(grid.values.size(), 0);
    std::deque<std::size_t> queue;
    const auto nx = static_cast<std::size_t>(grid.nx);
    const auto ny = static_cast<std::size_t>(grid.ny);
    for (std::size_t start = 0; start < grid.values.size(); ++start) {
        if (seen[start] || grid.values[start] <= threshold) continue;
        double mass = 0.0;
        seen[start] = 1;
        queue.push_back(start);
        while (!queue.empty()) {
            const std::size_t idx = queue.front();
            queue.pop_front();
            mass += grid.values[idx] * cell;
            const std::size_t ix = idx % nx;
            const std::size_t iy = idx / nx;
            auto visit = [&](std::size_t next) {
                if (!seen[next] && grid.values[next] > threshold) {
                    seen[next] = 1;
                    queue.push_back(next);
                }
            };
            if (ix > 0) visit(idx - 1);
            if (ix + 1 < nx) visit(idx + 1);
            if (iy > 0) visit(idx - nx);
            if (iy + 1 < ny) visit(idx + nx);
        }
        report.component_masses.push_back(mass);
    }
    std::sort(report.component_masses.begin(), report.component_masses.end(), std::greater<>());
    report.count = static_cast<int>(report.component_masses.size());
    return report;
}

}  // namespace jcm
