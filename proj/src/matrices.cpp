#include "sqdm/matrices.hpp"

#include "sqdm/error.hpp"

namespace sqdm {

namespace {

Rational ratio(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

RationalMatrix build_delta(const Partition& p) {
  const std::size_t n = p.order();
  RationalMatrix m(n, true);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u == v) continue;
      m(u, v) = p.part_of(u) == p.part_of(v) ? 4 : 1;
    }
  }
  return m;
}

LaplacianCoefficients laplacian_coefficients(const InvariantBundle& b, std::span<const std::uint32_t> sizes) {
  if (b.psi == 0) throw Error(ErrorCode::CofactorSumZero, "cofactor sum is zero");
  const std::size_t t = sizes.size();
  const Integer four_psi = 4 * b.psi;

  LaplacianCoefficients c;
  c.diagonal.resize(t);
  c.within.resize(t);
  c.across.assign(t, std::vector<Rational>(t));
  for (std::size_t i = 0; i < t; ++i) {
    const long n_i = sizes[i];
    // a_i = [ (n_i - 1)/2 theta_hat + (n_i - 3) psi_hat ] / (2 psi)
    c.diagonal[i] = ratio((n_i - 1) * b.theta_hat[i] + 2 * (n_i - 3) * b.psi_hat[i], four_psi);
    // b_i = -[ theta_hat / 2 + psi_hat ] / (2 psi)
    c.within[i] = -ratio(b.theta_hat[i] + 2 * b.psi_hat[i], four_psi);
    for (std::size_t j = 0; j < t; ++j) {
      if (j != i) c.across[i][j] = ratio(b.phi_hat2[i][j], b.psi);
    }
  }
  return c;
}

LaplacianCoefficients laplacian_coefficients(const Partition& p) {
  return laplacian_coefficients(compute_bundle(p), p.sizes());
}

RationalMatrix build_laplacian_like(const Partition& p) {
  const auto c = laplacian_coefficients(p);
  const std::size_t n = p.order();
  RationalMatrix m(n, true);
  for (std::size_t u = 0; u < n; ++u) {
    const std::size_t i = p.part_of(u);
    for (std::size_t v = 0; v < n; ++v) {
      const std::size_t j = p.part_of(v);
      if (u == v) {
        m(u, v) = c.diagonal[i];
      } else if (i == j) {
        m(u, v) = c.within[i];
      } else {
        m(u, v) = c.across[i][j];
      }
    }
  }
  return m;
}

RationalMatrix inverse_rank_one(const Partition& p) {
  const InvariantBundle b = compute_bundle(p);
  if (b.theta == 0) throw Error(ErrorCode::SingularDelta, "determinant is zero");
  if (b.psi == 0) throw Error(ErrorCode::CofactorSumZero, "cofactor sum is zero");
  const auto v = nu(p, b);
  const Rational inv_lambda = ratio(b.psi, b.theta);
  RationalMatrix out = -build_laplacian_like(p) + outer(v, v) * inv_lambda;
  out.set_symmetric(true);
  return out;
}

RationalMatrix inverse_block_form(const Partition& p) {
  const InvariantBundle b = compute_bundle(p);
  if (b.theta == 0) throw Error(ErrorCode::SingularDelta, "determinant is zero");
  const std::size_t t = p.parts();
  std::vector<Rational> block_diag(t);
  std::vector<std::vector<Rational>> block_off(t, std::vector<Rational>(t));
  for (std::size_t i = 0; i < t; ++i) {
    block_diag[i] = ratio(3 * b.theta_hat[i] + b.phi_hat[i], 4 * b.theta);
    for (std::size_t j = 0; j < t; ++j) {
      if (j != i) block_off[i][j] = -ratio(b.phi_hat2[i][j], b.theta);
    }
  }
  const Rational quarter(1, 4);
  const std::size_t n = p.order();
  RationalMatrix m(n, true);
  for (std::size_t u = 0; u < n; ++u) {
    const std::size_t i = p.part_of(u);
    for (std::size_t v = 0; v < n; ++v) {
      const std::size_t j = p.part_of(v);
      if (i == j) {
        m(u, v) = u == v ? block_diag[i] - quarter : block_diag[i];
      } else {
        m(u, v) = block_off[i][j];
      }
    }
  }
  return m;
}

RationalMatrix build_c_m(std::span<const std::uint32_t> sizes) {
  const std::size_t m = sizes.size();
  RationalMatrix c(m);
  for (std::size_t i = 0; i < m; ++i) {
    const long n_i = sizes[i];
    c(i, 0) = n_i;
    for (std::size_t j = 1; j < m; ++j) {
      if (i == 0) {
        c(i, j) = -4 * (n_i - 1);
      } else {
        c(i, j) = i == j ? 2 * (n_i - 2) : -n_i;
      }
    }
  }
  return c;
}

}  // namespace sqdm
