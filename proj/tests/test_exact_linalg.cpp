#include <doctest.h>

#include <random>
#include <vector>

#include "sqdm/error.hpp"
#include "sqdm/exact_linalg.hpp"
#include "sqdm/matrices.hpp"

using namespace sqdm;

namespace {

using Rows = std::vector<std::vector<Rational>>;

// Laplace expansion along the first row; exponential but obviously correct.
Rational naive_det(const RationalMatrix& m) {
  if (m.order() == 0) return 1;
  if (m.order() == 1) return m(0, 0);
  Rational out = 0;
  for (std::size_t j = 0; j < m.order(); ++j) {
    const Rational term = m(0, j) * naive_det(m.minor(0, j));
    out += j % 2 == 0 ? term : Rational(-term);
  }
  return out;
}

RationalMatrix random_matrix(std::mt19937& rng, std::size_t order, bool fractions) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, fractions ? 5 : 1);
  RationalMatrix m(order);
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; j < order; ++j) {
      Rational x(num(rng), den(rng));
      x.canonicalize();
      m(i, j) = x;
    }
  }
  return m;
}

RationalMatrix diag(std::initializer_list<int> values) {
  RationalMatrix m(values.size(), true);
  std::size_t i = 0;
  for (int v : values) {
    m(i, i) = v;
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("Bareiss determinant against Laplace expansion") {
  std::mt19937 rng(20240611);
  for (std::size_t order = 1; order <= 5; ++order) {
    for (int trial = 0; trial < 40; ++trial) {
      const auto m = random_matrix(rng, order, trial % 2 == 1);
      CHECK(det_bareiss(m) == naive_det(m));
    }
  }
  // A matrix needing a row swap in the first pivot.
  CHECK(det_bareiss(RationalMatrix::from_rows(Rows{{0, 1}, {1, 0}})) == -1);
  CHECK(det_bareiss(RationalMatrix::from_rows(Rows{{0, 0}, {1, 0}})) == 0);
}

TEST_CASE("determinant examples") {
  CHECK(det_bareiss(RationalMatrix::identity(3)) == 1);
  CHECK(det_bareiss(build_delta(Partition{2, 2})) == 192);
  CHECK(det_bareiss(build_delta(Partition{2, 1, 1})) == 0);
  CHECK(det_bareiss(build_delta(Partition{3, 2})) == -1664);
}

TEST_CASE("cofactor sums") {
  CHECK(cofactor_sum(RationalMatrix::from_rows(Rows{{0, 1}, {1, 0}})) == -2);
  CHECK(cofactor_sum(build_delta(Partition{2, 2})) == 128);
  CHECK(cofactor_sum(build_delta(Partition{3, 2})) == -1024);
  CHECK(cofactor_sum(build_delta(Partition{2, 1})) == 0);

  std::mt19937 rng(7);
  for (std::size_t order = 1; order <= 5; ++order) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto m = random_matrix(rng, order, trial % 2 == 0);
      Rational by_entry = 0;
      for (std::size_t i = 0; i < order; ++i) {
        for (std::size_t j = 0; j < order; ++j) by_entry += cofactor(m, i, j);
      }
      CHECK(cofactor_sum_adjugate(m) == by_entry);
      CHECK(cofactor_sum(m) == by_entry);
    }
  }
  // Singular matrices go through the reduction route too.
  for (const auto& p : all_partitions(8)) {
    const auto d = build_delta(p);
    CHECK(cofactor_sum(d) == cofactor_sum_adjugate(d));
  }
}

TEST_CASE("Gauss-Jordan inverse") {
  CHECK(inverse_gauss(RationalMatrix::identity(4)) == RationalMatrix::identity(4));
  CHECK(inverse_gauss(build_delta(Partition{2, 2})) == inverse_block_form(Partition{2, 2}));
  std::mt19937 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const auto m = random_matrix(rng, 4, true);
    if (det_bareiss(m) == 0) continue;
    CHECK(m * inverse_gauss(m) == RationalMatrix::identity(4));
  }
  try {
    inverse_gauss(build_delta(Partition{2, 1, 1}));
    FAIL("singular matrix inverted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SingularMatrix);
  }
}

TEST_CASE("rank") {
  CHECK(rank(RationalMatrix::zero(3)) == 0);
  CHECK(rank(RationalMatrix::identity(3)) == 3);
  CHECK(rank(RationalMatrix::from_rows(Rows{{1, 2}, {2, 4}})) == 1);
  CHECK(rank(build_laplacian_like(Partition{2, 2})) == 3);
  CHECK(rank(build_laplacian_like(Partition{2, 1, 1})) == 3);
  CHECK(rank(build_delta(Partition{2, 1, 1})) == 3);
}

TEST_CASE("characteristic polynomial") {
  const auto cp = char_poly(RationalMatrix::from_rows(Rows{{2, 1}, {1, 2}}));
  CHECK(cp.coeffs == std::vector<Rational>{1, -4, 3});
  CHECK(cp.degree() == 2);
  CHECK(cp.evaluate(1) == 0);
  CHECK(cp.evaluate(3) == 0);

  const auto l = char_poly(build_laplacian_like(Partition{2, 1, 1}));
  CHECK(l.coeffs == std::vector<Rational>{1, Rational(3, 4), Rational(-9, 4), Rational(1, 2), 0});

  const auto big = char_poly(build_laplacian_like(Partition{3, 2, 1, 1, 1}));
  const std::vector<Rational> expected{1,
                                       Rational(-13, 28),
                                       Rational(-339, 112),
                                       Rational(1537, 448),
                                       Rational(-191, 224),
                                       Rational(-75, 448),
                                       Rational(5, 56),
                                       Rational(-1, 112),
                                       0};
  CHECK(big.coeffs == expected);

  // p(0) = det(-M) = (-1)^n det M.
  std::mt19937 rng(3);
  for (std::size_t order = 1; order <= 6; ++order) {
    const auto m = random_matrix(rng, order, true);
    const Rational sign = order % 2 == 0 ? 1 : -1;
    CHECK(char_poly(m).evaluate(0) == sign * det_bareiss(m));
  }
}

TEST_CASE("inertia") {
  CHECK(inertia(diag({1, 0, -1})) == Inertia{1, 1, 1});
  CHECK(inertia(diag({5, 3, 0, 0})) == Inertia{2, 2, 0});
  CHECK(inertia(build_laplacian_like(Partition{2, 2})) == Inertia{2, 1, 1});
  CHECK(inertia(build_delta(Partition{2, 2})) == Inertia{2, 0, 2});
  CHECK(inertia(build_laplacian_like(Partition{3, 2, 1, 1, 1})) == Inertia{5, 1, 2});
  CHECK(inertia(RationalMatrix::zero(3)) == Inertia{0, 3, 0});
  try {
    inertia(RationalMatrix::from_rows(Rows{{0, 1}, {0, 0}}));
    FAIL("non-symmetric matrix accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSymmetric);
  }
}

TEST_CASE("eigenvalue multiplicity") {
  const auto l22 = build_laplacian_like(Partition{2, 2});
  CHECK(eigen_multiplicity(l22, Rational(1, 4)) == 2);
  CHECK(eigen_multiplicity(l22, 0) == 1);
  CHECK(eigen_multiplicity(l22, 1) == 0);
  CHECK(eigen_multiplicity(RationalMatrix::identity(3), 1) == 3);

  const auto l3 = build_laplacian_like(Partition{3, 2, 1, 1, 1});
  CHECK(eigen_multiplicity(l3, Rational(1, 4)) == 3);
  CHECK(eigen_multiplicity(l3, 1) == 2);
  CHECK(eigen_multiplicity(l3, -2) == 1);

  for (const auto& p : all_partitions(7)) {
    if (compute_bundle(p).psi == 0) continue;
    const auto l = build_laplacian_like(p);
    for (const Rational mu : {Rational(1, 4), Rational(1), Rational(0), Rational(-2)}) {
      CHECK((eigen_multiplicity(l, mu) >= 1) == (det_bareiss(l.shifted(mu)) == 0));
    }
  }
}
