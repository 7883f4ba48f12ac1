#include "jcm/angle.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "jcm/error.hpp"

namespace jcm {
namespace {

__extension__ typedef __int128 wide;

std::int64_t narrow(wide v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
        throw Error(ErrorCode::InvalidArgument, "rational arithmetic overflow");
    }
    return static_cast<std::int64_t>(v);
}

Rational reduce(wide num, wide den) {
    if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    wide a = num < 0 ? -num : num;
    wide b = den;
    while (b != 0) {
        const wide t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        num /= a;
        den /= a;
    }
    return Rational{narrow(num), narrow(den)};
}

// Exact values on the quarter-turn lattice, otherwise the library call on the
// reduced angle pi * r / q with 0 <= r < 2q.
CosSin reduced_cos_sin(std::int64_t r, std::int64_t q) {
    if ((2 * static_cast<wide>(r)) % q == 0) {
        switch (static_cast<int>((2 * static_cast<wide>(r)) / q)) {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            case 3: return {0.0, -1.0};
            default: break;
        }
    }
    const double x = std::numbers::pi * static_cast<double>(r) / static_cast<double>(q);
    return {std::cos(x), std::sin(x)};
}

}  // namespace

Rational Rational::make(std::int64_t num, std::int64_t den) { return reduce(num, den); }

Rational operator+(const Rational& a, const Rational& b) {
    return reduce(static_cast<wide>(a.num) * b.den + static_cast<wide>(b.num) * a.den,
                  static_cast<wide>(a.den) * b.den);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    return reduce(static_cast<wide>(a.num) * b.num, static_cast<wide>(a.den) * b.den);
}

Radians Radians::pi_times(Rational r) {
    Radians out;
    out.pi_multiple_ = Rational::make(r.num, r.den);
    return out;
}

double Radians::value() const noexcept {
    if (pi_multiple_) return std::numbers::pi * pi_multiple_->to_double();
    return value_;
}

Radians Radians::operator+(const Radians& other) const {
    if (exact() && other.exact()) return pi_times(*pi_multiple_ + *other.pi_multiple_);
    return Radians(value() + other.value());
}

Radians Radians::operator-(const Radians& other) const { return *this + (-other); }

Radians Radians::operator-() const {
    if (exact()) return pi_times(-*pi_multiple_);
    return Radians(-value_);
}

Radians Radians::times(std::int64_t factor) const {
    if (exact()) return pi_times(*pi_multiple_ * Rational{factor, 1});
    return Radians(value_ * static_cast<double>(factor));
}

Radians Radians::lerp(const Radians& a, const Radians& b, std::int64_t i, std::int64_t n) {
    if (n <= 0) throw Error(ErrorCode::InvalidArgument, "lerp needs n > 0");
    if (a.exact() && b.exact()) {
        return pi_times(*a.pi_multiple_ + (*b.pi_multiple_ - *a.pi_multiple_) * Rational::make(i, n));
    }
    const double t = static_cast<double>(i) / static_cast<double>(n);
    return Radians(a.value() + (b.value() - a.value()) * t);
}

CosSin cos_sin(std::int64_t multiplier, const Radians& angle) {
    if (const auto& pm = angle.pi_multiple()) {
        const wide period = 2 * static_cast<wide>(pm->den);
        wide r = (static_cast<wide>(multiplier) * pm->num) % period;
        if (r < 0) r += period;
        return reduced_cos_sin(static_cast<std::int64_t>(r), pm->den);
    }
    const double x = static_cast<double>(multiplier) * angle.value();
    return {std::cos(x), std::sin(x)};
}

CosSin cos_sin(double multiplier, const Radians& angle) {
    if (const auto& pm = angle.pi_multiple()) {
        // Reduce the multiple of pi modulo 2 before scaling by pi.
        const double turns = std::fmod(multiplier * static_cast<double>(pm->num) / static_cast<double>(pm->den), 2.0);
        const double x = std::numbers::pi * turns;
        return {std::cos(x), std::sin(x)};
    }
    const double x = multiplier * angle.value();
    return {std::cos(x), std::sin(x)};
}

}  // namespace jcm
