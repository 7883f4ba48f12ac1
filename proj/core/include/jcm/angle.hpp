#pragma once

#include <complex>
#include <cstdint>
#include <optional>

namespace jcm {

/// Reduced fraction num/den with den > 0. Arithmetic is overflow-checked and
/// throws Error(InvalidArgument) instead of wrapping.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational make(std::int64_t num, std::int64_t den);

    double to_double() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a) { return Rational{-a.num, a.den}; }
    friend bool operator==(const Rational&, const Rational&) = default;
};

/// An angle (or scaled time) in radians that remembers whether it is an exact
/// rational multiple of pi.
///
/// Integer multiples of an exact angle are reduced modulo 2*pi in integer
/// arithmetic before any trigonometric call, so cos(odd * pi/2) is exactly 0
/// and adding 2*pi leaves every phase bit-identical. Inexact angles behave
/// like plain doubles.
class Radians {
public:
    Radians() : pi_multiple_(Rational{}) {}
    Radians(double value) : value_(value) {}  // NOLINT: implicit on purpose, plain doubles are inexact angles

    static Radians pi_times(Rational r);
    static Radians pi_times(std::int64_t num, std::int64_t den = 1) { return pi_times(Rational::make(num, den)); }

    double value() const noexcept;
    bool exact() const noexcept { return pi_multiple_.has_value(); }
    const std::optional<Rational>& pi_multiple() const noexcept { return pi_multiple_; }

    Radians operator+(const Radians& other) const;
    Radians operator-(const Radians& other) const;
    Radians operator-() const;
    Radians times(std::int64_t factor) const;

    /// a + (b - a) * i / n, exact when both endpoints are exact.
    static Radians lerp(const Radians& a, const Radians& b, std::int64_t i, std::int64_t n);

private:
    double value_ = 0.0;
    std::optional<Rational> pi_multiple_;
};

struct CosSin {
    double cos;
    double sin;
};

/// cos and sin of multiplier * angle.
CosSin cos_sin(std::int64_t multiplier, const Radians& angle);
CosSin cos_sin(double multiplier, const Radians& angle);
inline CosSin cos_sin(int multiplier, const Radians& angle) { return cos_sin(std::int64_t{multiplier}, angle); }

inline std::complex<double> cis(std::int64_t multiplier, const Radians& angle) {
    const auto cs = cos_sin(multiplier, angle);
    return {cs.cos, cs.sin};
}

}  // namespace jcm
