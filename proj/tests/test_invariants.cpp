#include <doctest.h>

#include <vector>

#include "sqdm/error.hpp"
#include "sqdm/invariants.hpp"

using namespace sqdm;

namespace {

Partition all_ones(std::size_t t) { return Partition(std::vector<std::int64_t>(t, 1)); }

}  // namespace

TEST_CASE("bundle values") {
  SUBCASE("[2,2]") {
    auto b = compute_bundle(Partition{2, 2});
    CHECK(b.phi == 4);
    CHECK(b.psi == 8);
    CHECK(b.theta == 12);
    CHECK(b.phi_hat == std::vector<Integer>{2, 2});
    CHECK(b.psi_hat == std::vector<Integer>{2, 2});
    CHECK(b.phi_hat2[0][1] == 1);
    CHECK(b.psi_hat2[0][1] == 0);
  }
  SUBCASE("[2,1,1]") {
    auto b = compute_bundle(Partition{2, 1, 1});
    CHECK(b.phi == 2);
    CHECK(b.psi == -2);
    CHECK(b.theta == 0);
    CHECK(b.phi_hat == std::vector<Integer>{1, -2, -2});
  }
  SUBCASE("[1,1,1]") {
    auto b = compute_bundle(Partition{1, 1, 1});
    CHECK(b.phi == -1);
    CHECK(b.psi == 3);
    CHECK(b.theta == 2);
  }
}

TEST_CASE("bundle agrees with the direct evaluation and theta = phi + psi") {
  for (const auto& p : all_partitions(12)) {
    const auto fast = compute_bundle(p);
    const auto slow = direct_bundle(p.sizes());
    CHECK(fast.phi == slow.phi);
    CHECK(fast.psi == slow.psi);
    CHECK(fast.theta == fast.phi + fast.psi);
    for (std::size_t i = 0; i < p.parts(); ++i) {
      CHECK(fast.theta_hat[i] == fast.phi_hat[i] + fast.psi_hat[i]);
      CHECK(fast.psi_hat[i] == slow.psi_hat[i]);
      for (std::size_t j = 0; j < p.parts(); ++j) {
        if (i == j) continue;
        CHECK(fast.phi_hat2[i][j] == slow.phi_hat2[i][j]);
        CHECK(fast.psi_hat2[i][j] == slow.psi_hat2[i][j]);
      }
    }
  }
}

TEST_CASE("two-part double deletions are the empty product and empty sum") {
  auto b = compute_bundle(Partition{5, 3});
  CHECK(b.phi_hat2[0][1] == 1);
  CHECK(b.phi_hat2[1][0] == 1);
  CHECK(b.psi_hat2[0][1] == 0);
  CHECK(b.psi_hat2[1][0] == 0);
}

TEST_CASE("identities hold") {
  CHECK(check_identities(Partition{2, 2}));
  CHECK(check_identities(Partition{2, 1, 1}));
  CHECK(check_identities(Partition{5, 3, 2, 1}));
  std::size_t count = 0;
  for (const auto& p : all_partitions(14)) {
    CHECK(check_identities(p));
    ++count;
  }
  CHECK(count == 493);
}

TEST_CASE("det and cof closed forms") {
  CHECK(det_delta_closed(Partition{2, 2}) == 192);
  CHECK(det_delta_closed(Partition{2, 1, 1}) == 0);
  CHECK(cof_delta_closed(Partition{2, 2}) == 128);
  CHECK(cof_delta_closed(Partition{2, 1}) == 0);
  for (std::size_t t = 2; t <= 12; ++t) {
    const long sign = t % 2 == 1 ? 1 : -1;  // (-1)^(t-1)
    CHECK(det_delta_closed(all_ones(t)) == sign * static_cast<long>(t - 1));
    CHECK(cof_delta_closed(all_ones(t)) == sign * static_cast<long>(t));
  }
}

TEST_CASE("lambda") {
  CHECK(lambda(Partition{2, 2}) == Rational(3, 2));
  CHECK(lambda(Partition{2, 1, 1}) == 0);
  CHECK_THROWS_AS(lambda(Partition{2, 1}), Error);
  try {
    lambda(Partition{2, 1});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CofactorSumZero);
  }
  for (const auto& p : all_partitions(12)) {
    if (compute_bundle(p).psi == 0) continue;
    CHECK(lambda(p) * Rational(cof_delta_closed(p)) == Rational(det_delta_closed(p)));
  }
}

TEST_CASE("nu") {
  const Rational q(1, 4);
  CHECK(nu(Partition{2, 2}) == std::vector<Rational>{q, q, q, q});
  CHECK(nu(Partition{2, 1, 1}) == std::vector<Rational>{Rational(-1, 2), Rational(-1, 2), 1, 1});
  CHECK_THROWS_AS(nu(Partition{2, 1}), Error);
  for (const auto& p : all_partitions(12)) {
    if (compute_bundle(p).psi == 0) continue;
    Rational total = 0;
    for (const auto& x : nu(p)) total += x;
    CHECK(total == 1);
  }
}

TEST_CASE("det_c_m closed form") {
  CHECK(det_c_m_closed(std::vector<std::uint32_t>{2, 2}) == 8);
  CHECK(det_c_m_closed(std::vector<std::uint32_t>{7}) == 7);
  CHECK(det_c_m_closed(std::vector<std::uint32_t>{3, 2, 2}) == compute_bundle(Partition{3, 2, 2}).psi);
}
