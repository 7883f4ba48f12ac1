#include "jcm/fock.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "jcm/error.hpp"

namespace jcm {
namespace {

// exp(-|alpha|^2/2) underflows past this point.
constexpr double kMaxMeanPhotonNumber = 1400.0;

}  // namespace

FieldState::FieldState(std::vector<complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.empty()) throw Error(ErrorCode::InvalidArgument, "field state needs at least one amplitude");
}

double FieldState::norm_squared() const noexcept {
    double s = 0.0;
    for (const auto& a : amplitudes_) s += std::norm(a);
    return s;
}

FieldState FieldState::normalized() const {
    const double nrm = std::sqrt(norm_squared());
    if (!(nrm > 0.0)) throw Error(ErrorCode::InvalidArgument, "cannot normalize a zero vector");
    std::vector<complex> out(amplitudes_);
    for (auto& a : out) a /= nrm;
    return FieldState(std::move(out));
}

FieldState FieldState::resized(int cutoff) const {
    if (cutoff < 0) throw Error(ErrorCode::InvalidArgument, "negative cutoff");
    std::vector<complex> out(amplitudes_);
    out.resize(static_cast<std::size_t>(cutoff) + 1, complex{});
    return FieldState(std::move(out));
}

CoherentState coherent_state(complex alpha, int cutoff, double tail_tol) {
    if (cutoff < 0) throw Error(ErrorCode::InvalidArgument, "cutoff must be >= 0");
    if (!(tail_tol > 0.0)) throw Error(ErrorCode::NonPositiveTolerance, "tail_tol must be > 0");
    const double nbar = std::norm(alpha);
    if (!std::isfinite(nbar) || nbar > kMaxMeanPhotonNumber) {
        throw Error(ErrorCode::InvalidArgument, "|alpha|^2 must be finite and <= 1400");
    }

    std::vector<complex> amps(static_cast<std::size_t>(cutoff) + 1);
    amps[0] = complex{std::exp(-0.5 * nbar), 0.0};
    for (int n = 0; n < cutoff; ++n) {
        amps[n + 1] = amps[n] * alpha / std::sqrt(static_cast<double>(n + 1));
    }

    // Poisson tail sum_{n > cutoff} |C_n|^2, summed term by term until the
    // terms are past the peak and negligible.
    double tail = 0.0;
    double term = std::norm(amps.back());
    for (long n = cutoff + 1;; ++n) {
        term *= nbar / static_cast<double>(n);
        tail += term;
        if (static_cast<double>(n) > nbar && term <= tail * 1e-17) break;
        if (term == 0.0 && static_cast<double>(n) > nbar) break;
    }
    tail = std::clamp(tail, 0.0, 1.0);
    if (tail > tail_tol) {
        throw Error(ErrorCode::TailTooHeavy, "tail mass " + std::to_string(tail) + " above cutoff " +
                                                 std::to_string(cutoff) + " exceeds tolerance");
    }

    FieldState state = FieldState(std::move(amps)).normalized();
    return {std::move(state), TailReport{tail, cutoff}};
}

FieldState kerr_state(complex alpha, const Radians& gamma, int cutoff, double tail_tol) {
    const auto coherent = coherent_state(alpha, cutoff, tail_tol);
    std::vector<complex> amps(coherent.state.amplitudes().begin(), coherent.state.amplitudes().end());
    for (std::size_t n = 0; n < amps.size(); ++n) {
        const auto pairs = static_cast<std::int64_t>(n) * (static_cast<std::int64_t>(n) - 1) / 2;
        amps[n] *= cis(pairs, gamma);
    }
    return FieldState(std::move(amps));
}

complex overlap(const FieldState& a, const FieldState& b) {
    if (a.cutoff() != b.cutoff()) {
        throw Error(ErrorCode::CutoffMismatch,
                    "cutoffs " + std::to_string(a.cutoff()) + " and " + std::to_string(b.cutoff()) + " differ");
    }
    complex s{};
    for (std::size_t n = 0; n < a.size(); ++n) s += std::conj(a[n]) * b[n];
    return s;
}

double fidelity(const FieldState& a, const FieldState& b) { return std::clamp(std::norm(overlap(a, b)), 0.0, 1.0); }

}  // namespace jcm
