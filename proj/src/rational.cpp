#include "flopcalc/rational.hpp"

#include <sstream>

namespace flopcalc {

Rat rat_pow(const Rat& base, long long e) {
  if (e == 0) return Rat(1);
  if (base == 0 && e < 0) throw DomainError("rat_pow: zero base with negative exponent");
  Rat b = base;
  long long n = e;
  if (n < 0) {
    b = Rat(1) / base;
    n = -n;
  }
  Rat out(1);
  while (n > 0) {
    if (n & 1) out *= b;
    b *= b;
    n >>= 1;
  }
  return out;
}

Rat parse_rat(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(text));
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den == 0) throw ParseError("rational literal has zero denominator: " + text);
    if (den < 0) {
      num = -num;
      den = -den;
    }
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw ParseError("bad rational literal: '" + text + "' (expected p or p/q)");
  }
}

std::string rat_to_string(const Rat& r) {
  std::ostringstream os;
  os << rat_num(r);
  if (!is_integer(r)) os << '/' << rat_den(r);
  return os.str();
}

std::string rat_to_decimal(const Rat& r, int digits) {
  Int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Int num = rat_num(r) * scale;
  Int den = rat_den(r);
  const bool negative = num < 0;
  if (negative) num = -num;
  Int q = num / den;
  Int rem = num % den;
  const Int twice = rem * 2;
  if (twice > den || (twice == den && (q & 1) == 1)) ++q;
  std::ostringstream body;
  body << q;
  std::string s = body.str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  if (negative && q != 0) s.insert(0, "-");
  return s;
}

} // namespace flopcalc
