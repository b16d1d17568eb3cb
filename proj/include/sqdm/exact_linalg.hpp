#pragma once

#include <cstddef>
#include <vector>

#include "sqdm/rational.hpp"
#include "sqdm/rational_matrix.hpp"

namespace sqdm {

/// Monic characteristic polynomial det(xI - M). `coeffs[k]` multiplies
/// x^(n-k), so coeffs[0] = 1 and coeffs[n] = (-1)^n det M.
struct CharPoly {
  std::vector<Rational> coeffs;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  Rational evaluate(const Rational& x) const;
};

struct Inertia {
  std::size_t positive = 0;
  std::size_t zero = 0;
  std::size_t negative = 0;

  bool operator==(const Inertia&) const = default;
};

/// Determinant by fraction-free (Bareiss) elimination. Each row is first
/// scaled to integers by the lcm of its denominators; the scale factors are
/// divided out at the end.
Rational det_bareiss(const RationalMatrix& m);

/// Sum of all signed cofactors, computed as det M'(1|1) where M' is M after
/// subtracting the first row from every other row and then the first column
/// from every other column.
Rational cofactor_sum(const RationalMatrix& m);

/// sum_{i,j} (-1)^(i+j) det M(i|j), one Bareiss determinant per minor.
Rational cofactor_sum_adjugate(const RationalMatrix& m);

/// (-1)^(i+j) det M(i|j)
Rational cofactor(const RationalMatrix& m, std::size_t i, std::size_t j);

/// Gauss-Jordan inverse. Throws Error{SingularMatrix} when det M = 0.
RationalMatrix inverse_gauss(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Faddeev-LeVerrier recurrence in exact arithmetic.
CharPoly char_poly(const RationalMatrix& m);

/// Sign counts of the eigenvalues, read off the characteristic polynomial
/// with Descartes' rule of signs (exact for real-rooted polynomials).
/// Throws Error{NotSymmetric} for non-symmetric input.
Inertia inertia(const RationalMatrix& m);
Inertia inertia_from_char_poly(const CharPoly& p);

/// order - rank(M - mu I). Throws Error{NotSymmetric} for non-symmetric input.
std::size_t eigen_multiplicity(const RationalMatrix& m, const Rational& mu);

}  // namespace sqdm
