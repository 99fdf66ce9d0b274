#pragma once

#include <string_view>

#include "cartanlab/laurent.hpp"
#include "cartanlab/rational.hpp"

namespace cartanlab {

/// Grammar: `[-]digits[/digits]`, whitespace insignificant.
Rational parse_rational(std::string_view text);

/// Grammar: `±`-separated terms `c`, `c*t^k`, `t^k`, `t` with integer k and
/// 0 <= c < p; whitespace insignificant.  "0" is the zero element.
LaurentPoly parse_laurent(std::string_view text, std::uint64_t p);

inline std::string format_scalar(const Rational& x) { return x.str(); }
inline std::string format_scalar(const LaurentPoly& x) { return x.str(); }

} // namespace cartanlab
