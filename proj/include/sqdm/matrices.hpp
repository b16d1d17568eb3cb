#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sqdm/invariants.hpp"
#include "sqdm/partition.hpp"
#include "sqdm/rational_matrix.hpp"

namespace sqdm {

/// Entries of the Laplacian-like matrix, per part: `diagonal[i]` on the
/// diagonal of block i, `within[i]` off the diagonal of block i, and
/// `across[i][j]` everywhere in block (i, j), i != j.
struct LaplacianCoefficients {
  std::vector<Rational> diagonal;
  std::vector<Rational> within;
  std::vector<std::vector<Rational>> across;
};

/// Squared distance matrix of K_{n_1..n_t}: 0 on the diagonal, 4 between
/// distinct vertices of the same part, 1 across parts.
RationalMatrix build_delta(const Partition& p);

/// Throws Error{CofactorSumZero} when psi = 0.
LaplacianCoefficients laplacian_coefficients(const Partition& p);
LaplacianCoefficients laplacian_coefficients(const InvariantBundle& b, std::span<const std::uint32_t> sizes);

/// Symmetric matrix with zero row and column sums whose rank-one
/// perturbation is the inverse of the squared distance matrix.
/// Throws Error{CofactorSumZero} when psi = 0.
RationalMatrix build_laplacian_like(const Partition& p);

/// -L + (1/lambda) nu nu^T. Throws Error{SingularDelta} when theta = 0,
/// Error{CofactorSumZero} when psi = 0.
RationalMatrix inverse_rank_one(const Partition& p);

/// Blockwise inverse: diagonal blocks (3 theta_hat_i + phi_hat_i) / (4 theta) J - I/4,
/// off-diagonal blocks -(phi_hat2_ij / theta) J. Needs only theta != 0.
/// Throws Error{SingularDelta} when theta = 0.
RationalMatrix inverse_block_form(const Partition& p);

/// The m x m matrix whose determinant is sum_i n_i prod_{j != i} (3 n_j - 4):
/// first row (n_1, -4(n_1 - 1), ...), row i > 1 has n_i in column 1,
/// 2(n_i - 2) on the diagonal and -n_i elsewhere.
RationalMatrix build_c_m(std::span<const std::uint32_t> sizes);

}  // namespace sqdm
