#include "jcm/dynamics.hpp"

#include <cmath>
#include <string>

#include "jcm/error.hpp"

namespace jcm {

void validate(const ModelParams& params) {
    if (params.k < 1) throw Error(ErrorCode::InvalidArgument, "k must be >= 1");
    if (params.cutoff < params.k) throw Error(ErrorCode::InvalidArgument, "cutoff must be >= k");
    if (params.mode == RabiMode::Quadratic && params.k != 4) {
        throw Error(ErrorCode::QuadraticRequiresK4, "quadratic frequencies exist only for k = 4, got k = " +
                                                        std::to_string(params.k));
    }
    if (!(params.tail_tol > 0.0)) throw Error(ErrorCode::NonPositiveTolerance, "tail_tol must be > 0");
}

std::int64_t quadratic_rabi_frequency(std::int64_t n) noexcept { return n * n + 5 * n + 5; }

double rabi_frequency(int n, int k, RabiMode mode) {
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "photon number must be >= 0");
    if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be >= 1");
    if (mode == RabiMode::Quadratic) {
        if (k != 4) throw Error(ErrorCode::QuadraticRequiresK4, "quadratic frequencies exist only for k = 4");
        return static_cast<double>(quadratic_rabi_frequency(n));
    }
    double product = 1.0;
    for (int j = 1; j <= k; ++j) product *= static_cast<double>(n + j);
    return std::sqrt(product);
}

FieldState initial_field(const ModelParams& params) {
    validate(params);
    return coherent_state(params.alpha, params.cutoff - params.k, params.tail_tol).state.resized(params.cutoff);
}

double JointState::norm_squared() const noexcept {
    double s = 0.0;
    for (const auto& a : excited) s += std::norm(a);
    for (const auto& a : ground) s += std::norm(a);
    return s;
}

JointState evolve(const ModelParams& params, const Radians& tau) {
    if (!std::isfinite(tau.value())) throw Error(ErrorCode::InvalidArgument, "tau must be finite");
    const FieldState c = initial_field(params);
    const auto size = c.size();
    const auto k = static_cast<std::size_t>(params.k);

    JointState out;
    out.excited.assign(size, complex{});
    out.ground.assign(size, complex{});
    out.tau = tau.value();
    out.k = params.k;

    // Amplitudes above cutoff - k are zero by construction of initial_field.
    for (std::size_t n = 0; n + k < size; ++n) {
        const CosSin cs = params.mode == RabiMode::Quadratic
                              ? cos_sin(quadratic_rabi_frequency(static_cast<std::int64_t>(n)), tau)
                              : cos_sin(rabi_frequency(static_cast<int>(n), params.k, RabiMode::Exact), tau);
        out.excited[n] = c[n] * cs.cos;
        out.ground[n + k] = complex{0.0, -1.0} * c[n] * cs.sin;
    }
    return out;
}

FieldRank2 field_rank2(const JointState& state) {
    FieldRank2 f;
    f.u = state.excited;
    f.v.resize(state.ground.size());
    for (std::size_t n = 0; n < state.ground.size(); ++n) f.v[n] = complex{0.0, 1.0} * state.ground[n];
    return f;
}

namespace {

complex inner(const std::vector<complex>& a, const std::vector<complex>& b) {
    complex s{};
    for (std::size_t n = 0; n < a.size(); ++n) s += std::conj(a[n]) * b[n];
    return s;
}

}  // namespace

double purity(const FieldRank2& field) {
    const double uu = inner(field.u, field.u).real();
    const double vv = inner(field.v, field.v).real();
    return uu * uu + vv * vv + 2.0 * std::norm(inner(field.u, field.v));
}

std::pair<double, double> gram_eigenvalues(const FieldRank2& field) {
    const double a = inner(field.u, field.u).real();
    const double d = inner(field.v, field.v).real();
    const double b = std::abs(inner(field.u, field.v));
    const double mean = 0.5 * (a + d);
    const double radius = std::sqrt(0.25 * (a - d) * (a - d) + b * b);
    return {mean + radius, mean - radius};
}

AtomDensity atom_density(const JointState& state) {
    AtomDensity rho;
    rho.rho11 = 0.0;
    rho.rho22 = 0.0;
    for (const auto& g : state.ground) rho.rho11 += std::norm(g);
    for (const auto& e : state.excited) rho.rho22 += std::norm(e);
    complex coherence{};
    for (std::size_t n = 0; n < state.excited.size(); ++n) coherence += state.ground[n] * std::conj(state.excited[n]);
    rho.rho12 = coherence;
    return rho;
}

complex stripped_coherence(const AtomDensity& rho) { return complex{0.0, -1.0} * rho.rho21(); }

}  // namespace jcm
