#pragma once

#include <gmpxx.h>

#include <string>

namespace sqdm {

using Integer = mpz_class;
using Rational = mpq_class;

/// Lowest-terms "p/q" with q > 0; integers print without a denominator.
inline std::string to_string(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  return c.get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Parses "p", "-p" or "p/q" (q != 0) into canonical form.
Rational parse_rational(const std::string& text);

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

}  // namespace sqdm
