#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "sqdm/rational.hpp"

namespace sqdm {

/// Part sizes (n_1, ..., n_t) of a complete multipartite graph K_{n_1,...,n_t}.
///
/// Sizes are stored in canonical order: parts of size >= 2 first in
/// non-increasing order, followed by the unit parts. That order also fixes
/// vertex indexing for every matrix built from the partition: part 0 owns
/// vertices [0, n_0), part 1 owns [n_0, n_0 + n_1), and so on.
class Partition {
 public:
  /// Throws Error{EmptyOrSingletonPartition} when fewer than two parts are
  /// given and Error{NonPositivePart} when a size is zero or negative.
  explicit Partition(std::span<const std::int64_t> sizes);
  Partition(std::initializer_list<std::int64_t> sizes);

  /// Parses a comma separated token such as "2,2,1".
  static Partition parse(std::string_view token);

  const std::vector<std::uint32_t>& sizes() const noexcept { return sizes_; }
  std::uint32_t size_of(std::size_t part) const { return sizes_.at(part); }

  /// Total vertex count n.
  std::size_t order() const noexcept { return order_; }
  /// Number of parts t.
  std::size_t parts() const noexcept { return sizes_.size(); }
  /// Number of parts of size one (h).
  std::size_t unit_parts() const noexcept { return unit_parts_; }
  /// Number of parts of size at least two (s).
  std::size_t big_parts() const noexcept { return sizes_.size() - unit_parts_; }

  /// First vertex index of a part in canonical block order.
  std::size_t offset_of(std::size_t part) const { return offsets_.at(part); }
  /// Part index owning a vertex.
  std::size_t part_of(std::size_t vertex) const { return vertex_part_.at(vertex); }

  bool operator==(const Partition& other) const noexcept { return sizes_ == other.sizes_; }

 private:
  std::vector<std::uint32_t> sizes_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> vertex_part_;
  std::size_t order_ = 0;
  std::size_t unit_parts_ = 0;
};

/// Exact vanishing data for det and cof of the squared distance matrix.
struct Classification {
  bool det_zero = false;
  bool cof_zero = false;
  /// (h - 1) - sum_{n_i >= 2} n_i / (3 n_i - 4)
  Rational margin;
  /// h - sum_{n_i >= 2} n_i / (3 n_i - 4)
  Rational cof_margin;
};

Classification classify(const Partition& p);

/// Calls `visit` once per multiset partition with at least two parts and
/// 2 <= n <= n_max: by increasing n, and for each n in lexicographically
/// decreasing order of the canonical size list. Returning false from
/// `visit` stops the enumeration.
void enumerate_partitions(std::size_t n_max, const std::function<bool(const Partition&)>& visit);

/// Materialized form of enumerate_partitions.
std::vector<Partition> all_partitions(std::size_t n_max);

}  // namespace sqdm
