#pragma once

#include <string_view>

#include "jcm/angle.hpp"

namespace jcm::cli {

/// Parses a scaled-time expression into an angle.
///
/// Accepted forms are sums and differences of terms, each one of
///     pi | pi/Q | P pi | P*pi | P pi/Q | P*pi/Q | X | X/Q
/// where Q is a positive integer, P a decimal literal without exponent and X
/// any decimal literal. Expressions built only from pi-terms (and the literal
/// 0) are kept as exact rational multiples of pi; anything else becomes a
/// plain double. Throws Error(ParseError).
///
///     "pi/8-pi/24000"  -> exact 2999/24000 pi
///     "0.25pi"         -> exact pi/4
///     "0.785"          -> inexact 0.785
Radians parse_tau(std::string_view text);

}  // namespace jcm::cli
