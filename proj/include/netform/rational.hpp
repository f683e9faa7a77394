#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace netform {

/// Exact rational number. All game-theoretic quantities are carried in this type.
using Rational = mpq_class;

/// Parses "p/q", an integer, or a finite decimal such as "-2.125" exactly.
/// Throws ParseError on anything else (including a zero denominator).
Rational parse_rational(std::string_view text);

/// Canonical form: "p" for integers, "p/q" otherwise, q > 0, lowest terms.
std::string to_string(const Rational& value);

/// Fixed-point rendering rounded half away from zero, e.g. 1/168 -> "0.0060".
std::string to_decimal(const Rational& value, int places = 4);

double to_double(const Rational& value);

/// num/den in lowest terms. mpq_class(num, den) alone leaves the fraction uncanonicalized.
inline Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace netform
