#include "sqdm/partition.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "sqdm/error.hpp"

namespace sqdm {

Partition::Partition(std::span<const std::int64_t> sizes) {
  if (sizes.size() < 2) {
    throw Error(ErrorCode::EmptyOrSingletonPartition,
                "a complete multipartite graph needs at least two parts");
  }
  sizes_.reserve(sizes.size());
  for (auto v : sizes) {
    if (v < 1) {
      throw Error(ErrorCode::NonPositivePart, "part size " + std::to_string(v) + " is not positive");
    }
    if (v > static_cast<std::int64_t>(UINT32_MAX)) {
      throw Error(ErrorCode::Parse, "part size " + std::to_string(v) + " is too large");
    }
    sizes_.push_back(static_cast<std::uint32_t>(v));
  }
  // Non-increasing order puts the parts of size >= 2 first and the units last.
  std::sort(sizes_.begin(), sizes_.end(), std::greater<>());

  offsets_.reserve(sizes_.size());
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    offsets_.push_back(order_);
    order_ += sizes_[i];
    vertex_part_.insert(vertex_part_.end(), sizes_[i], i);
    if (sizes_[i] == 1) ++unit_parts_;
  }
}

Partition::Partition(std::initializer_list<std::int64_t> sizes)
    : Partition(std::span<const std::int64_t>(sizes.begin(), sizes.size())) {}

Partition Partition::parse(std::string_view token) {
  std::vector<std::int64_t> sizes;
  std::size_t pos = 0;
  while (true) {
    auto comma = token.find(',', pos);
    auto piece = token.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    std::int64_t value = 0;
    auto [end, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (piece.empty() || ec != std::errc() || end != piece.data() + piece.size()) {
      throw Error(ErrorCode::Parse, "cannot parse part size '" + std::string(piece) + "' in '" +
                                        std::string(token) + "'");
    }
    sizes.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Partition(sizes);
}

Classification classify(const Partition& p) {
  Rational sum = 0;
  for (auto n : p.sizes()) {
    if (n < 2) continue;
    Rational term(n, 3 * static_cast<long>(n) - 4);
    term.canonicalize();
    sum += term;
  }
  Classification c;
  const Rational h(static_cast<long>(p.unit_parts()));
  c.margin = h - 1 - sum;
  c.cof_margin = h - sum;
  c.det_zero = sgn(c.margin) == 0;
  c.cof_zero = sgn(c.cof_margin) == 0;
  return c;
}

namespace {

// Emits the partitions of `remaining` into parts <= `cap` in lexicographically
// decreasing order, appended to `prefix`.
bool descend(std::size_t remaining, std::size_t cap, std::vector<std::int64_t>& prefix,
             const std::function<bool(const Partition&)>& visit) {
  if (remaining == 0) {
    if (prefix.size() < 2) return true;
    return visit(Partition(prefix));
  }
  for (std::size_t part = std::min(cap, remaining); part >= 1; --part) {
    prefix.push_back(static_cast<std::int64_t>(part));
    bool more = descend(remaining - part, part, prefix, visit);
    prefix.pop_back();
    if (!more) return false;
  }
  return true;
}

}  // namespace

void enumerate_partitions(std::size_t n_max, const std::function<bool(const Partition&)>& visit) {
  std::vector<std::int64_t> prefix;
  for (std::size_t n = 2; n <= n_max; ++n) {
    if (!descend(n, n, prefix, visit)) return;
  }
}

std::vector<Partition> all_partitions(std::size_t n_max) {
  std::vector<Partition> out;
  enumerate_partitions(n_max, [&](const Partition& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

}  // namespace sqdm
