#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sqdm/partition.hpp"
#include "sqdm/rational.hpp"

namespace sqdm {

/// Product/sum invariants of a part-size list, with single and double
/// deletions. With f(k) = 3 n_k - 4:
///
///   phi            = prod_k f(k)
///   phi_hat[i]     = prod_{k != i} f(k)
///   phi_hat2[i][j] = prod_{k != i,j} f(k)
///   psi            = sum_k n_k prod_{l != k} f(l)
///   psi_hat[i]     = psi of the sizes with part i removed
///   psi_hat2[i][j] = psi of the sizes with parts i and j removed
///   theta          = phi + psi, theta_hat[i] = phi_hat[i] + psi_hat[i]
///
/// Empty products are 1 and empty sums are 0. Diagonal entries of the
/// double-deletion tables are unused and left at zero.
struct InvariantBundle {
  Integer phi;
  Integer psi;
  Integer theta;
  std::vector<Integer> phi_hat;
  std::vector<Integer> psi_hat;
  std::vector<Integer> theta_hat;
  std::vector<std::vector<Integer>> phi_hat2;
  std::vector<std::vector<Integer>> psi_hat2;
};

InvariantBundle compute_bundle(const Partition& p);

/// Evaluates every quantity of the bundle straight from its defining
/// product/sum (no divisions, O(t^4)). Used as a reference for
/// compute_bundle and for the identity checks.
InvariantBundle direct_bundle(std::span<const std::uint32_t> sizes);

/// True iff the four recurrences relating theta, psi and phi with their
/// deletions hold for all admissible indices, and the fast bundle agrees
/// with the direct evaluation.
bool check_identities(const Partition& p);

/// (-4)^(n-t) * theta
Integer det_delta_closed(const Partition& p);
/// (-4)^(n-t) * psi
Integer cof_delta_closed(const Partition& p);

/// theta / psi. Throws Error{CofactorSumZero} when psi = 0.
Rational lambda(const Partition& p);
Rational lambda(const InvariantBundle& b);

/// Per-vertex vector nu(v) = phi_hat[i] / psi for v in part i, in
/// canonical block order. Throws Error{CofactorSumZero} when psi = 0.
std::vector<Rational> nu(const Partition& p);
std::vector<Rational> nu(const Partition& p, const InvariantBundle& b);

/// sum_i n_i prod_{j != i} (3 n_j - 4) for an arbitrary non-empty size list.
Integer det_c_m_closed(std::span<const std::uint32_t> sizes);

}  // namespace sqdm
