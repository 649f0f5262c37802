#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "flopcalc/errors.hpp"

namespace flopcalc {

// No floating point anywhere in the core: integer lattice data uses Int,
// coordinates on the dual spaces use Rat.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

/// base^e for integer e of either sign. 0^0 = 1; 0^negative is a domain error.
Rat rat_pow(const Rat& base, long long e);

/// Parses "p", "-p", or "p/q" with q > 0 after normalisation.
Rat parse_rat(const std::string& text);

/// "p" or "p/q", always in lowest terms, denominator positive.
std::string rat_to_string(const Rat& r);

/// Fixed-point decimal with `digits` fractional digits, rounding half to even.
/// Used only at the SVG boundary; everything before it stays exact.
std::string rat_to_decimal(const Rat& r, int digits);

} // namespace flopcalc
