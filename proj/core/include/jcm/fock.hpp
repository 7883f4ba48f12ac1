#pragma once

#include <complex>
#include <span>
#include <vector>

#include "jcm/angle.hpp"

namespace jcm {

using complex = std::complex<double>;

inline constexpr double kDefaultTailTolerance = 1e-9;

/// Pure single-mode field state on the truncated Fock basis |0>..|N>.
///
/// Instances built by the constructors below are normalized to 1e-10.
/// The type itself only guarantees that there are cutoff()+1 amplitudes.
class FieldState {
public:
    FieldState() : amplitudes_(1, complex{1.0, 0.0}) {}
    explicit FieldState(std::vector<complex> amplitudes);

    int cutoff() const noexcept { return static_cast<int>(amplitudes_.size()) - 1; }
    std::span<const complex> amplitudes() const noexcept { return amplitudes_; }
    const complex& operator[](std::size_t n) const { return amplitudes_[n]; }
    std::size_t size() const noexcept { return amplitudes_.size(); }

    double norm_squared() const noexcept;

    /// Copy with the amplitudes divided by their norm.
    FieldState normalized() const;
    /// Copy extended with zero amplitudes (or truncated) to a new cutoff.
    FieldState resized(int cutoff) const;

private:
    std::vector<complex> amplitudes_;
};

/// Probability mass the untruncated state would have above the cutoff.
struct TailReport {
    double tail_mass = 0.0;
    int cutoff_used = 0;
};

struct CoherentState {
    FieldState state;
    TailReport tail;
};

/// |alpha> truncated at `cutoff`, renormalized.
///
/// Amplitudes come from the recurrence a_{n+1} = a_n * alpha / sqrt(n+1)
/// seeded with exp(-|alpha|^2/2); the tail beyond the cutoff is summed with
/// the same recurrence before truncation. Throws TailTooHeavy when the tail
/// exceeds tail_tol and NonPositiveTolerance when tail_tol <= 0.
CoherentState coherent_state(complex alpha, int cutoff, double tail_tol = kDefaultTailTolerance);

/// Kerr state |alpha, gamma>: coherent amplitudes times exp(i gamma n(n-1)/2).
FieldState kerr_state(complex alpha, const Radians& gamma, int cutoff, double tail_tol = kDefaultTailTolerance);

/// <a|b>. Throws CutoffMismatch.
complex overlap(const FieldState& a, const FieldState& b);

/// |<a|b>|^2 clamped to [0, 1].
double fidelity(const FieldState& a, const FieldState& b);

}  // namespace jcm
