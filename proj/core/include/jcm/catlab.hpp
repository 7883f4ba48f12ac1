#pragma once

#include <cstddef>
#include <vector>

#include "jcm/dynamics.hpp"
#include "jcm/observables.hpp"

namespace jcm {

/// Offset delta_r = r pi / (16 nbar) from tau = pi/4 at which the atom and
/// field nearly disentangle. Exact (a rational multiple of pi) whenever nbar
/// is an integer.
struct DipOffset {
    int r = 1;
    double nbar = 0.0;
    Radians delta;
};

/// Throws EvenR for even r and InvalidArgument for nbar <= 0.
DipOffset dip_offset(int r, double nbar);

/// Signed distance, in radians, of (W_n - W_{n-4})(pi/4 + delta_r) from the
/// nearest odd multiple of pi/2, Quadratic frequencies. Before wrapping
/// into (-pi/2, pi/2] this is r pi (2(n - nbar) + 1) / (4 nbar).
double dip_phase_mismatch(long n, const DipOffset& offset);

/// Predicted field at tau = pi/2 once the atom is found in |g>:
/// the Kerr state |-alpha, pi>, written over |n> (i.e. compare against the
/// ground branch shifted down by k).
FieldState expected_kerr_state(complex alpha, int cutoff, double tail_tol = kDefaultTailTolerance);

struct CatState {
    FieldState state;
    /// Norm of the superposition before renormalization; differs from 1 by
    /// the overlap of the two Kerr branches.
    double raw_norm = 1.0;
};

/// Superposition of two Kerr states predicted at tau = pi/4 + delta:
///
///   [ e^{5i tau} |-i alpha e^{+6i delta}, pi/2 + 2 delta>
///   - e^{-5i tau} | i alpha e^{-6i delta}, -pi/2 - 2 delta> ] / sqrt(2)
///
/// This is sum_n C_n sin(W_n tau)|n> (Quadratic W_n) regrouped into Kerr
/// states, so it describes the ground branch shifted down by 4.
CatState expected_cat_state(complex alpha, const DipOffset& offset, int cutoff,
                            double tail_tol = kDefaultTailTolerance);

enum class Outcome { Excited, Ground };

/// Normalized field conditioned on detecting the atom in `outcome`.
///
/// The ground branch keeps its |n+k> support unless `downshift` is set, in
/// which case amplitude n+k moves to index n (the top k entries become zero).
/// Throws NegligibleBranch when the branch probability is <= 1e-12.
FieldState post_selected_field(const JointState& state, Outcome outcome, bool downshift = false);

struct DipScan {
    std::vector<double> tau;
    std::vector<double> entropy;
    std::vector<std::size_t> minima;  // strict interior local minima

    double step() const noexcept { return tau.size() > 1 ? tau[1] - tau[0] : 0.0; }
};

/// Entropy on `steps` evenly spaced times spanning center +- halfwidth.
DipScan entropy_dip_scan(const ModelParams& params, const Radians& center, const Radians& halfwidth, int steps);

struct MinimumAlignment {
    std::size_t index = 0;  // into DipScan::tau
    double distance_in_steps = 0.0;
};

/// Local minimum of the scan closest to `tau`. Throws InvalidArgument when the
/// scan has no minima.
MinimumAlignment nearest_minimum(const DipScan& scan, double tau);

struct ComponentReport {
    int count = 0;
    double threshold_fraction = 0.1;
    std::vector<double> component_masses;  // descending
};

inline constexpr double kDefaultComponentThreshold = 0.1;

/// 4-connected components of grid cells with Q above threshold_fraction * max(Q).
/// Throws EmptyGrid / InvalidArgument.
ComponentReport count_components(const PhaseGrid& grid, double threshold_fraction = kDefaultComponentThreshold);

}  // namespace jcm
