#pragma once

#include <cstddef>
#include <vector>

#include "jcm/dynamics.hpp"

namespace jcm {

/// Photon-number distribution P_n = <n|rho_F|n>, n = 0..N.
struct Pnd {
    std::vector<double> probabilities;
    double tau = 0.0;

    double sum() const noexcept;
};

Pnd pnd(const JointState& state);

// Closed-form photon-number distributions for Quadratic-mode dynamics with
// k = 4. Each takes the coherent amplitudes C_n (as produced by
// initial_field) and is evaluated without touching the time evolution, so it
// can be held against pnd(evolve(...)).

/// tau = pi/4: phase (n^2-3n+1) pi/4 reduces to +pi/4 for n mod 4 in {0,3}
/// and -pi/4 for n mod 4 in {1,2}.
Pnd pnd_closed_quarter(const FieldState& coherent);

/// Residue (+1 or -1, in units of pi/4) of (n^2-3n+1) pi/4 modulo pi.
int quarter_period_residue(long n) noexcept;

/// tau = pi/8: (|C_n|^2 + |C_{n-4}|^2) times (2-sqrt2)/4 for n mod 8 < 4 and
/// (2+sqrt2)/4 otherwise.
Pnd pnd_closed_eighth(const FieldState& coherent);

/// tau = pi/4 + delta: (|C_n|^2 + |C_{n-4}|^2) sin^2[(n^2-3n+1)(pi/4+delta)].
Pnd pnd_closed_near_quarter(const FieldState& coherent, const Radians& delta);

/// Von Neumann entropy of the atom (equal to that of the field), natural log.
double entropy(const AtomDensity& rho);

/// Eigenvalues of the 2x2 atomic density matrix, descending, clamped to [0,1].
std::pair<double, double> atom_eigenvalues(const AtomDensity& rho);

/// Husimi Q(beta) = <beta|rho_F|beta> / pi.
double q_point(const FieldRank2& field, complex beta);

struct PhaseWindow {
    double re_min = -12.0;
    double re_max = 12.0;
    double im_min = -12.0;
    double im_max = 12.0;
};

/// Q sampled on an nx-by-ny lattice including the window edges. Values are
/// stored row-major: values[iy * nx + ix] at beta = re(ix) + i im(iy).
struct PhaseGrid {
    PhaseWindow window;
    int nx = 0;
    int ny = 0;
    std::vector<double> values;

    double re(int ix) const noexcept;
    double im(int iy) const noexcept;
    double dx() const noexcept;
    double dy() const noexcept;
    double at(int ix, int iy) const { return values[static_cast<std::size_t>(iy) * nx + ix]; }
    /// sum Q dx dy over all points.
    double riemann_sum() const noexcept;
};

/// Throws DegenerateWindow for nx, ny < 2 or unordered bounds.
PhaseGrid q_grid(const FieldRank2& field, const PhaseWindow& window, int nx, int ny);

/// W(tau) = sum_n |C_n|^2 cos(2 W_n tau), evaluated from the coherent
/// weights directly (not through the joint state).
double atomic_inversion(const ModelParams& params, const Radians& tau);

struct InversionBand {
    double tau_begin = 0.0;
    double tau_end = 0.0;
    std::size_t samples = 0;
};

/// Maximal runs of consecutive samples tau_i = t0 + (t1-t0) i/(steps-1) with
/// |W| < threshold that last at least min_duration. A run shorter than one
/// Rabi period is just a zero crossing, not a collapse.
std::vector<InversionBand> collapse_bands(const ModelParams& params, const Radians& t0, const Radians& t1,
                                          int steps, double threshold, double min_duration);

}  // namespace jcm
