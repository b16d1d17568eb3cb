#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sqdm/exact_linalg.hpp"
#include "sqdm/partition.hpp"
#include "sqdm/rational_matrix.hpp"

namespace sqdm {

struct CheckResult {
  std::string name;
  bool passed = false;
  /// Exact value(s) backing the verdict; on failure, the offending data.
  std::string witness;
};

struct SkippedCheck {
  std::string name;
  std::string reason;
};

struct VerificationReport {
  Partition partition;
  std::vector<CheckResult> checks;
  std::vector<SkippedCheck> skipped;

  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
};

/// Observations on the Laplacian-like matrix of a partition with a singular
/// squared distance matrix. Nothing here is asserted; the clauses are
/// recorded as data.
struct ConjectureReport {
  Partition partition;
  std::size_t mult_quarter = 0;
  std::size_t mult_one = 0;
  Inertia inertia;
  /// Positive eigenvalues are exactly 1/4 and 1 (counted with multiplicity).
  bool positives_exhausted = false;
  /// mult(1/4) = n - t, mult(1) = h - 1 and no other positive eigenvalue.
  bool clause_i_holds = false;
  /// inertia = (n - s - 1, 1, s)
  bool clause_ii_holds = false;
};

/// Squared shortest-path distances of K_{n_1..n_t}, found by breadth-first
/// search over an explicit adjacency list (canonical vertex order).
RationalMatrix bfs_distance_matrix(const Partition& p);

/// Cofactor checks on the Laplacian-like matrix cover every entry up to this
/// order and only the first row above it.
inline constexpr std::size_t kAllCofactorsMaxOrder = 8;

/// Runs every applicable check; inapplicable ones are listed as skipped with
/// the reason. Never throws for a valid partition.
VerificationReport verify_partition(const Partition& p);

/// Empty when det Delta != 0.
std::optional<ConjectureReport> conjecture_report(const Partition& p);

/// Worker count from SQDM_WORKERS, falling back to the hardware concurrency.
std::size_t default_workers();

/// Verifies every partition with n <= n_max using `workers` threads and hands
/// the reports to `sink` in enumeration order.
void scan(std::size_t n_max, std::size_t workers, const std::function<void(const VerificationReport&)>& sink);

/// Conjecture reports for every det-zero partition with n <= n_max, in
/// enumeration order.
std::vector<ConjectureReport> conjecture_scan(std::size_t n_max, std::size_t workers = 1);

}  // namespace sqdm
