#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "sqdm/error.hpp"
#include "sqdm/partition.hpp"

using namespace sqdm;

namespace {

std::vector<std::uint32_t> sizes_of(const Partition& p) { return p.sizes(); }

// Number of integer partitions of every m <= n_max, by the coin-change recurrence.
std::vector<std::uint64_t> partition_counts(std::size_t n_max) {
  std::vector<std::uint64_t> count(n_max + 1, 0);
  count[0] = 1;
  for (std::size_t part = 1; part <= n_max; ++part) {
    for (std::size_t m = part; m <= n_max; ++m) count[m] += count[m - part];
  }
  return count;
}

ErrorCode error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an sqdm::Error");
  return ErrorCode::Parse;
}

}  // namespace

TEST_CASE("partition derived counts") {
  Partition p{2, 2};
  CHECK(p.order() == 4);
  CHECK(p.parts() == 2);
  CHECK(p.unit_parts() == 0);
  CHECK(p.big_parts() == 2);
}

TEST_CASE("partition canonical order puts units last") {
  Partition p{1, 2, 1};
  CHECK(sizes_of(p) == std::vector<std::uint32_t>{2, 1, 1});
  CHECK(p.order() == 4);
  CHECK(p.parts() == 3);
  CHECK(p.unit_parts() == 2);
  CHECK(p.big_parts() == 1);

  Partition q{1, 3, 5, 1, 2};
  CHECK(sizes_of(q) == std::vector<std::uint32_t>{5, 3, 2, 1, 1});
  CHECK(q.offset_of(0) == 0);
  CHECK(q.offset_of(2) == 8);
  CHECK(q.part_of(4) == 0);
  CHECK(q.part_of(5) == 1);
  CHECK(q.part_of(11) == 4);
}

TEST_CASE("partition rejects invalid sizes") {
  CHECK(error_of([] { Partition p{3}; }) == ErrorCode::EmptyOrSingletonPartition);
  CHECK(error_of([] { Partition p(std::span<const std::int64_t>{}); }) == ErrorCode::EmptyOrSingletonPartition);
  CHECK(error_of([] { Partition p{2, 0}; }) == ErrorCode::NonPositivePart);
  CHECK(error_of([] { Partition p{2, -1, 3}; }) == ErrorCode::NonPositivePart);
}

TEST_CASE("partition parse") {
  CHECK(sizes_of(Partition::parse("2,2,1")) == std::vector<std::uint32_t>{2, 2, 1});
  CHECK(sizes_of(Partition::parse("1, 3")) == std::vector<std::uint32_t>{3, 1});
  CHECK(error_of([] { Partition::parse("2,,1"); }) == ErrorCode::Parse);
  CHECK(error_of([] { Partition::parse("2,a"); }) == ErrorCode::Parse);
  CHECK(error_of([] { Partition::parse(""); }) == ErrorCode::Parse);
  CHECK(error_of([] { Partition::parse("4"); }) == ErrorCode::EmptyOrSingletonPartition);
  CHECK(error_of([] { Partition::parse("2,0"); }) == ErrorCode::NonPositivePart);
}

TEST_CASE("classify examples") {
  SUBCASE("[2,1,1] is det-zero") {
    auto c = classify(Partition{2, 1, 1});
    CHECK(c.det_zero);
    CHECK_FALSE(c.cof_zero);
    CHECK(c.margin == 0);
    CHECK(c.cof_margin == 1);
  }
  SUBCASE("[2,1] is cof-zero") {
    auto c = classify(Partition{2, 1});
    CHECK_FALSE(c.det_zero);
    CHECK(c.cof_zero);
    CHECK(c.margin == -1);
  }
  SUBCASE("[1,1,1] is neither") {
    auto c = classify(Partition{1, 1, 1});
    CHECK_FALSE(c.det_zero);
    CHECK_FALSE(c.cof_zero);
    CHECK(c.margin == 2);
  }
  SUBCASE("[3,2,1,1,1] margin") {
    CHECK(classify(Partition{3, 2, 1, 1, 1}).margin == Rational(2, 5));
  }
}

TEST_CASE("classify is order invariant") {
  std::mt19937 rng(20240611);
  for (const auto& p : all_partitions(10)) {
    std::vector<std::int64_t> shuffled(p.sizes().begin(), p.sizes().end());
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const auto a = classify(p);
    const auto b = classify(Partition(shuffled));
    CHECK(a.det_zero == b.det_zero);
    CHECK(a.cof_zero == b.cof_zero);
    CHECK(a.margin == b.margin);
    CHECK(a.cof_margin == b.cof_margin);
  }
}

TEST_CASE("vanishing flags imply the necessary ranges on h") {
  for (const auto& p : all_partitions(14)) {
    const auto c = classify(p);
    const Rational h(static_cast<long>(p.unit_parts()));
    const Rational t(static_cast<long>(p.parts()));
    if (c.det_zero) {
      CHECK(t / 4 + Rational(3, 4) < h);
      CHECK(h <= t / 2 + Rational(1, 2));
    }
    if (c.cof_zero) {
      CHECK(t / 4 < h);
      CHECK(h <= t / 2);
    }
  }
}

TEST_CASE("enumerate small cases") {
  auto as_lists = [](std::size_t n_max) {
    std::vector<std::vector<std::uint32_t>> out;
    for (const auto& p : all_partitions(n_max)) out.push_back(p.sizes());
    return out;
  };
  using L = std::vector<std::vector<std::uint32_t>>;
  CHECK(as_lists(2) == L{{1, 1}});
  CHECK(as_lists(3) == L{{1, 1}, {2, 1}, {1, 1, 1}});
  CHECK(as_lists(4) == L{{1, 1}, {2, 1}, {1, 1, 1}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
}

TEST_CASE("enumerate count matches the partition function") {
  const auto counts = partition_counts(14);
  std::uint64_t expected = 0;
  for (std::size_t n = 2; n <= 14; ++n) expected += counts[n] - 1;
  CHECK(expected == 493);

  std::vector<Partition> seen = all_partitions(14);
  CHECK(seen.size() == expected);
  for (const auto& p : seen) {
    std::size_t sum = 0;
    for (auto v : p.sizes()) sum += v;
    CHECK(sum == p.order());
    CHECK(p.big_parts() + p.unit_parts() == p.parts());
    CHECK(std::is_sorted(p.sizes().begin(), p.sizes().end(), std::greater<>()));
  }
  // Distinct multisets only.
  auto sorted = seen;
  std::sort(sorted.begin(), sorted.end(), [](const Partition& a, const Partition& b) { return a.sizes() < b.sizes(); });
  CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
}

TEST_CASE("enumerate stops early") {
  std::size_t visited = 0;
  enumerate_partitions(10, [&](const Partition&) { return ++visited < 5; });
  CHECK(visited == 5);
}
