#include "sqdm/exact_linalg.hpp"

#include <utility>

#include "sqdm/error.hpp"

namespace sqdm {

namespace {

using IntegerRows = std::vector<std::vector<Integer>>;

// Scales every row to integers. Returns the product of the row scale factors.
Integer integer_rows(const RationalMatrix& m, IntegerRows& rows) {
  const std::size_t n = m.order();
  rows.assign(n, std::vector<Integer>(n));
  Integer scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    scale *= l;
  }
  return scale;
}

// Fraction-free elimination in place. Returns the rank and the determinant of
// the leading nonsingular block (the full determinant when rank == n), with
// row swaps accounted for.
std::pair<std::size_t, Integer> bareiss(IntegerRows& a, std::size_t cols) {
  const std::size_t rows = a.size();
  Integer prev = 1;
  int swap_sign = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      std::swap(a[pivot], a[r]);
      swap_sign = -swap_sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return {r, swap_sign * prev};
}

void require_symmetric(const RationalMatrix& m) {
  if (!m.is_symmetric()) throw Error(ErrorCode::NotSymmetric, "matrix is not symmetric");
}

}  // namespace

Rational CharPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (const auto& c : coeffs) acc = acc * x + c;
  return acc;
}

Rational det_bareiss(const RationalMatrix& m) {
  const std::size_t n = m.order();
  if (n == 0) return 1;
  IntegerRows rows;
  const Integer scale = integer_rows(m, rows);
  auto [r, det] = bareiss(rows, n);
  if (r < n) return 0;
  Rational out(det, scale);
  out.canonicalize();
  return out;
}

Rational cofactor_sum(const RationalMatrix& m) {
  const std::size_t n = m.order();
  if (n == 0) return 0;
  RationalMatrix reduced(m);
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) reduced(i, j) -= m(0, j);
  }
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) reduced(i, j) -= reduced(i, 0);
  }
  return det_bareiss(reduced.minor(0, 0));
}

Rational cofactor(const RationalMatrix& m, std::size_t i, std::size_t j) {
  Rational d = det_bareiss(m.minor(i, j));
  return (i + j) % 2 == 0 ? d : Rational(-d);
}

Rational cofactor_sum_adjugate(const RationalMatrix& m) {
  Rational acc = 0;
  for (std::size_t i = 0; i < m.order(); ++i) {
    for (std::size_t j = 0; j < m.order(); ++j) acc += cofactor(m, i, j);
  }
  return acc;
}

RationalMatrix inverse_gauss(const RationalMatrix& m) {
  const std::size_t n = m.order();
  RationalMatrix a(m);
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && sgn(a(pivot, c)) == 0) ++pivot;
    if (pivot == n) throw Error(ErrorCode::SingularMatrix, "matrix is singular");
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(c, j));
        std::swap(inv(pivot, j), inv(c, j));
      }
    }
    const Rational scale = 1 / a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) *= scale;
      inv(c, j) *= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(a(i, c)) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  inv.set_symmetric(m.symmetric() && inv.is_symmetric());
  return inv;
}

std::size_t rank(const RationalMatrix& m) {
  if (m.order() == 0) return 0;
  IntegerRows rows;
  integer_rows(m, rows);
  return bareiss(rows, m.order()).first;
}

CharPoly char_poly(const RationalMatrix& m) {
  const std::size_t n = m.order();
  CharPoly p;
  p.coeffs.assign(n + 1, Rational(0));
  p.coeffs[0] = 1;
  // M_0 = 0; M_k = A M_{k-1} + c_{k-1} I; c_k = -tr(A M_k) / k
  RationalMatrix mk = RationalMatrix::zero(n);
  for (std::size_t k = 1; k <= n; ++k) {
    RationalMatrix next = m * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += p.coeffs[k - 1];
    mk = std::move(next);
    RationalMatrix am = m * mk;
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    p.coeffs[k] = -trace / Rational(static_cast<long>(k));
  }
  return p;
}

Inertia inertia_from_char_poly(const CharPoly& p) {
  const std::size_t n = p.degree();
  Inertia out;
  while (out.zero < n && sgn(p.coeffs[n - out.zero]) == 0) ++out.zero;

  auto variations = [&](bool mirror) {
    std::size_t count = 0;
    int last = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      int s = sgn(p.coeffs[k]);
      if (s == 0) continue;
      // x -> -x flips the sign of the x^(n-k) coefficient when n-k is odd.
      if (mirror && (n - k) % 2 == 1) s = -s;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  };
  out.positive = variations(false);
  out.negative = variations(true);
  return out;
}

Inertia inertia(const RationalMatrix& m) {
  require_symmetric(m);
  return inertia_from_char_poly(char_poly(m));
}

std::size_t eigen_multiplicity(const RationalMatrix& m, const Rational& mu) {
  require_symmetric(m);
  return m.order() - rank(m.shifted(mu));
}

}  // namespace sqdm
