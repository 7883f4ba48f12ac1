#include "jcm/observables.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "jcm/error.hpp"

namespace jcm {
namespace {

std::vector<double> weights(const FieldState& coherent) {
    std::vector<double> w(coherent.size());
    for (std::size_t n = 0; n < w.size(); ++n) w[n] = std::norm(coherent[n]);
    return w;
}

// |C_n|^2 + |C_{n-4}|^2 with the second term absent below n = 4.
double paired_weight(const std::vector<double>& w, std::size_t n) {
    return w[n] + (n >= 4 ? w[n - 4] : 0.0);
}

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

}  // namespace

double Pnd::sum() const noexcept {
    double s = 0.0;
    for (double p : probabilities) s += p;
    return s;
}

Pnd pnd(const JointState& state) {
    Pnd out;
    out.tau = state.tau;
    out.probabilities.resize(state.excited.size());
    for (std::size_t n = 0; n < state.excited.size(); ++n) {
        out.probabilities[n] = std::norm(state.excited[n]) + std::norm(state.ground[n]);
    }
    return out;
}

int quarter_period_residue(long n) noexcept {
    switch (((n % 4) + 4) % 4) {
        case 0:
        case 3: return +1;
        default: return -1;
    }
}

Pnd pnd_closed_quarter(const FieldState& coherent) {
    const auto w = weights(coherent);
    Pnd out;
    out.tau = std::numbers::pi / 4.0;
    out.probabilities.resize(w.size());
    for (std::size_t n = 0; n < w.size(); ++n) {
        const double phase = quarter_period_residue(static_cast<long>(n)) * std::numbers::pi / 4.0;
        const double c = std::cos(phase);
        const double s = std::sin(phase);
        out.probabilities[n] = w[n] * c * c + (n >= 4 ? w[n - 4] : 0.0) * s * s;
    }
    return out;
}

Pnd pnd_closed_eighth(const FieldState& coherent) {
    const auto w = weights(coherent);
    const double low = (2.0 - std::numbers::sqrt2) / 4.0;
    const double high = (2.0 + std::numbers::sqrt2) / 4.0;
    Pnd out;
    out.tau = std::numbers::pi / 8.0;
    out.probabilities.resize(w.size());
    for (std::size_t n = 0; n < w.size(); ++n) {
        out.probabilities[n] = paired_weight(w, n) * (n % 8 < 4 ? low : high);
    }
    return out;
}

Pnd pnd_closed_near_quarter(const FieldState& coherent, const Radians& delta) {
    const auto w = weights(coherent);
    const Radians tau = Radians::pi_times(1, 4) + delta;
    Pnd out;
    out.tau = tau.value();
    out.probabilities.resize(w.size());
    for (std::size_t n = 0; n < w.size(); ++n) {
        const auto m = static_cast<std::int64_t>(n);
        const double s = cos_sin(m * m - 3 * m + 1, tau).sin;
        out.probabilities[n] = paired_weight(w, n) * s * s;
    }
    return out;
}

std::pair<double, double> atom_eigenvalues(const AtomDensity& rho) {
    const double trace = rho.rho11 + rho.rho22;
    const double diff = rho.rho22 - rho.rho11;
    const double radius = std::sqrt(diff * diff + 4.0 * std::norm(rho.rho12));
    const double upper = 0.5 * (trace + radius);
    // The small eigenvalue from the determinant keeps its relative accuracy
    // near pure states.
    const double det = rho.rho11 * rho.rho22 - std::norm(rho.rho12);
    const double lower = upper > 0.0 ? std::max(det, 0.0) / upper : 0.0;
    return {std::clamp(upper, 0.0, 1.0), std::clamp(lower, 0.0, 1.0)};
}

double entropy(const AtomDensity& rho) {
    const auto [plus, minus] = atom_eigenvalues(rho);
    return std::clamp(-xlogx(plus) - xlogx(minus), 0.0, std::numbers::ln2);
}

double q_point(const FieldRank2& field, complex beta) {
    const std::size_t size = std::min(field.u.size(), field.v.size());
    const complex beta_conj = std::conj(beta);
    // term_n = e^{-|beta|^2/2} conj(beta)^n / sqrt(n!)
    complex term{std::exp(-0.5 * std::norm(beta)), 0.0};
    complex su{};
    complex sv{};
    for (std::size_t n = 0; n < size; ++n) {
        su += term * field.u[n];
        sv += term * field.v[n];
        term *= beta_conj / std::sqrt(static_cast<double>(n + 1));
    }
    return (std::norm(su) + std::norm(sv)) / std::numbers::pi;
}

double PhaseGrid::re(int ix) const noexcept { return window.re_min + dx() * ix; }
double PhaseGrid::im(int iy) const noexcept { return window.im_min + dy() * iy; }
double PhaseGrid::dx() const noexcept { return (window.re_max - window.re_min) / (nx - 1); }
double PhaseGrid::dy() const noexcept { return (window.im_max - window.im_min) / (ny - 1); }

double PhaseGrid::riemann_sum() const noexcept {
    double s = 0.0;
    for (double q : values) s += q;
    return s * dx() * dy();
}

PhaseGrid q_grid(const FieldRank2& field, const PhaseWindow& window, int nx, int ny) {
    if (nx < 2 || ny < 2) throw Error(ErrorCode::DegenerateWindow, "grid needs at least 2 points per axis");
    if (!(window.re_min < window.re_max) || !(window.im_min < window.im_max)) {
        throw Error(ErrorCode::DegenerateWindow, "window bounds must satisfy min < max");
    }
    PhaseGrid grid;
    grid.window = window;
    grid.nx = nx;
    grid.ny = ny;
    grid.values.resize(static_cast<std::size_t>(nx) * ny);

#pragma omp parallel for schedule(static)
    for (int iy = 0; iy < ny; ++iy) {
        const double im = grid.im(iy);
        for (int ix = 0; ix < nx; ++ix) {
            grid.values[static_cast<std::size_t>(iy) * nx + ix] = q_point(field, complex{grid.re(ix), im});
        }
    }
    return grid;
}

namespace {

double inversion_from_weights(const std::vector<double>& w, const ModelParams& params, const Radians& tau) {
    double total = 0.0;
    for (std::size_t n = 0; n < w.size(); ++n) {
        if (w[n] == 0.0) continue;
        const auto m = static_cast<std::int64_t>(n);
        const double cos2 = params.mode == RabiMode::Quadratic
                                ? cos_sin(2 * quadratic_rabi_frequency(m), tau).cos
                                : cos_sin(2.0 * rabi_frequency(static_cast<int>(n), params.k, RabiMode::Exact), tau).cos;
        total += w[n] * cos2;
    }
    return total;
}

}  // namespace

double atomic_inversion(const ModelParams& params, const Radians& tau) {
    return inversion_from_weights(weights(initial_field(params)), params, tau);
}

std::vector<InversionBand> collapse_bands(const ModelParams& params, const Radians& t0, const Radians& t1,
                                          int steps, double threshold, double min_duration) {
    if (steps < 2) throw Error(ErrorCode::InvalidArgument, "steps must be >= 2");
    const auto c2 = weights(initial_field(params));
    std::vector<Radians> grid;
    std::vector<double> taus;
    grid.reserve(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        grid.push_back(Radians::lerp(t0, t1, i, steps - 1));
        taus.push_back(grid.back().value());
    }
    std::vector<double> w(grid.size());

#pragma omp parallel for schedule(static)
    for (int i = 0; i < steps; ++i) w[i] = inversion_from_weights(c2, params, grid[i]);

    std::vector<InversionBand> bands;
    std::size_t start = 0;
    bool inside = false;
    auto close = [&](std::size_t end) {
        const InversionBand band{taus[start], taus[end], end - start + 1};
        if (band.tau_end - band.tau_begin >= min_duration) bands.push_back(band);
    };
    for (std::size_t i = 0; i < w.size(); ++i) {
        const bool small = std::abs(w[i]) < threshold;
        if (small && !inside) {
            start = i;
            inside = true;
        } else if (!small && inside) {
            close(i - 1);
            inside = false;
        }
    }
    if (inside) close(w.size() - 1);
    return bands;
}

}  // namespace jcm
