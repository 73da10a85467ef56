#pragma once

#include <gmpxx.h>

#include <string>

namespace hwalg {

// Exact scalars. All coefficient arithmetic in the library runs over Q
// with arbitrary-precision integers; mpq_class keeps values reduced with
// a positive denominator once canonicalized.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

/// Renders as "p" or "p/q" with q > 0.
std::string render_rational(const Rational& q);

/// Accepts "p", "p/q", optional leading sign. Throws ParseError.
Rational parse_rational(const std::string& text);

} // namespace hwalg
