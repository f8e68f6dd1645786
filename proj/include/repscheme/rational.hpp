#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace repscheme {

/// Exact rationals. GMP's canonical form (gcd 1, positive denominator) is the
/// normal form everywhere; no floating point appears in the core.
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// If q = s^2 for a rational s >= 0, returns s.
std::optional<Rational> rational_sqrt(const Rational& q);

/// Parses `p` or `p/q` with optional sign. Throws ParseError on junk.
Rational parse_rational(const std::string& text, int line = 0, int column = 0);

std::string to_string(const Rational& q);

/// Bit-size measure used for pivot selection in exact elimination.
std::size_t rational_size(const Rational& q);

}  // namespace repscheme
