#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace urykat {

// All distances and function values are exact rationals. GMP keeps them in
// lowest terms with a positive denominator, which is exactly the invariant
// the rest of the library relies on.
using Rational = mpq_class;

// Parses "p/q" or a plain integer string. Rejects zero or negative
// denominators and any trailing garbage.
Rational parse_rational(const std::string& text);

// Lowest-terms "p/q" (or "p" when the denominator is 1).
std::string format_rational(const Rational& value);

std::vector<std::string> format_rationals(const std::vector<Rational>& values);
std::vector<Rational> parse_rationals(const std::vector<std::string>& texts);

inline Rational rat(long numerator, long denominator = 1) {
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

inline Rational abs_diff(const Rational& a, const Rational& b) {
  return a >= b ? Rational(a - b) : Rational(b - a);
}

// True when value is an integer multiple of 1/q (no sign restriction).
bool is_multiple_of_step(const Rational& value, int q);

// Largest multiple of 1/q that is <= value.
Rational floor_to_step(const Rational& value, int q);

}  // namespace urykat
