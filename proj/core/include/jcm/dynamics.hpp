#pragma once

#include <cstdint>
#include <vector>

#include "jcm/angle.hpp"
#include "jcm/fock.hpp"

namespace jcm {

/// Which generalized Rabi frequency drives the evolution.
///  - Exact:     sqrt((n+1)(n+2)...(n+k))
///  - Quadratic: n^2 + 5n + 5, the large-n expansion for k = 4 only. Every
///               value is an odd integer, which makes the dynamics periodic.
enum class RabiMode { Exact, Quadratic };

struct ModelParams {
    int k = 4;
    complex alpha{};
    int cutoff = 256;
    RabiMode mode = RabiMode::Quadratic;
    double tail_tol = kDefaultTailTolerance;
};

/// Throws InvalidArgument / QuadraticRequiresK4 / NonPositiveTolerance.
void validate(const ModelParams& params);

double rabi_frequency(int n, int k, RabiMode mode);

/// n^2 + 5n + 5 as an exact integer (Quadratic mode, k = 4).
std::int64_t quadratic_rabi_frequency(std::int64_t n) noexcept;

/// Coherent amplitudes C_n used by evolve(): the coherent state truncated at
/// cutoff - k (so every |n+k, g> it feeds stays inside the basis), then
/// zero-padded to the full cutoff.
FieldState initial_field(const ModelParams& params);

/// Psi(tau) = sum_n C_n (cos(W_n tau)|n,e> - i sin(W_n tau)|n+k,g>).
struct JointState {
    std::vector<complex> excited;  // coefficient of |n, e>
    std::vector<complex> ground;   // coefficient of |n, g>, zero for n < k
    double tau = 0.0;
    int k = 4;

    int cutoff() const noexcept { return static_cast<int>(excited.size()) - 1; }
    double norm_squared() const noexcept;
};

JointState evolve(const ModelParams& params, const Radians& tau);

/// Reduced field operator rho_F = |u><u| + |v><v|.
struct FieldRank2 {
    std::vector<complex> u;  // C_n cos(W_n tau) at index n
    std::vector<complex> v;  // C_n sin(W_n tau) at index n + k
};

FieldRank2 field_rank2(const JointState& state);

/// Tr(rho_F^2) from the dyads: |u|^4 + |v|^4 + 2|<u|v>|^2.
double purity(const FieldRank2& field);

/// The two (possibly zero) nonzero eigenvalues of rho_F, from the 2x2 Gram
/// matrix of {u, v}; descending.
std::pair<double, double> gram_eigenvalues(const FieldRank2& field);

/// Atomic reduced density matrix in the (|g>, |e>) ordering:
/// rho11 = <g|rho|g>, rho22 = <e|rho|e>, rho12 = <g|rho|e>.
struct AtomDensity {
    double rho11 = 0.0;
    double rho22 = 1.0;
    complex rho12{};

    complex rho21() const noexcept { return std::conj(rho12); }
};

/// rho12 = sum_n ground_n conj(excited_n), taken directly from the state so
/// the matrix is Hermitian and positive by construction.
AtomDensity atom_density(const JointState& state);

/// rho12 with the -i of the emitted-photon amplitude stripped:
///     sum_n C_{n+k} conj(C_n) cos(W_{n+k} tau) sin(W_n tau),
/// whose phase follows e^{+i k phi} for alpha = |alpha| e^{i phi}. This is
/// the orientation in which the near-quarter-period coherence is usually
/// quoted (as -e^{4 i phi}/2). Equals -i * rho21.
complex stripped_coherence(const AtomDensity& rho);

}  // namespace jcm
