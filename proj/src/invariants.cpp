#include "sqdm/invariants.hpp"

#include <cassert>
#include <string>

#include "sqdm/error.hpp"

namespace sqdm {

namespace {

Integer factor(std::uint32_t n) { return Integer(3 * static_cast<long>(n) - 4); }

Integer power_minus_four(std::size_t exponent) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), 4, exponent);
  if (exponent % 2 == 1) out = -out;
  return out;
}

void require_psi(const Integer& psi) {
  if (psi == 0) throw Error(ErrorCode::CofactorSumZero, "cofactor sum is zero");
}

}  // namespace

// 3n - 4 is never zero for integer n, so the deletions are exact quotients of
// phi and psi_hat2 factors as phi_hat2 * (S - r_i - r_j) with r_k = n_k / (3 n_k - 4).
InvariantBundle compute_bundle(const Partition& p) {
  const auto& sizes = p.sizes();
  const std::size_t t = sizes.size();

  InvariantBundle b;
  b.phi = 1;
  for (auto n : sizes) b.phi *= factor(n);

  std::vector<Rational> ratio(t);
  Rational ratio_sum = 0;
  for (std::size_t i = 0; i < t; ++i) {
    ratio[i] = Rational(Integer(sizes[i]), factor(sizes[i]));
    ratio[i].canonicalize();
    ratio_sum += ratio[i];
  }

  b.phi_hat.resize(t);
  b.psi_hat.resize(t);
  b.theta_hat.resize(t);
  b.phi_hat2.assign(t, std::vector<Integer>(t));
  b.psi_hat2.assign(t, std::vector<Integer>(t));

  auto to_integer = [](const Rational& q) {
    Rational c(q);
    c.canonicalize();
    assert(c.get_den() == 1);
    return Integer(c.get_num());
  };

  b.psi = to_integer(Rational(b.phi) * ratio_sum);
  b.theta = b.phi + b.psi;

  for (std::size_t i = 0; i < t; ++i) {
    b.phi_hat[i] = b.phi / factor(sizes[i]);
    b.psi_hat[i] = to_integer(Rational(b.phi_hat[i]) * (ratio_sum - ratio[i]));
    b.theta_hat[i] = b.phi_hat[i] + b.psi_hat[i];
    for (std::size_t j = 0; j < t; ++j) {
      if (i == j) continue;
      b.phi_hat2[i][j] = b.phi_hat[i] / factor(sizes[j]);
      b.psi_hat2[i][j] = to_integer(Rational(b.phi_hat2[i][j]) * (ratio_sum - ratio[i] - ratio[j]));
    }
  }
  return b;
}

InvariantBundle direct_bundle(std::span<const std::uint32_t> sizes) {
  const std::size_t t = sizes.size();
  constexpr std::size_t none = static_cast<std::size_t>(-1);

  auto product_without = [&](std::size_t a, std::size_t b, std::size_t c) {
    Integer out = 1;
    for (std::size_t k = 0; k < t; ++k) {
      if (k != a && k != b && k != c) out *= factor(sizes[k]);
    }
    return out;
  };
  auto weighted_sum_without = [&](std::size_t a, std::size_t b) {
    Integer out = 0;
    for (std::size_t k = 0; k < t; ++k) {
      if (k == a || k == b) continue;
      out += Integer(sizes[k]) * product_without(a, b, k);
    }
    return out;
  };

  InvariantBundle b;
  b.phi = product_without(none, none, none);
  b.psi = weighted_sum_without(none, none);
  b.theta = b.phi + b.psi;
  b.phi_hat.resize(t);
  b.psi_hat.resize(t);
  b.theta_hat.resize(t);
  b.phi_hat2.assign(t, std::vector<Integer>(t));
  b.psi_hat2.assign(t, std::vector<Integer>(t));
  for (std::size_t i = 0; i < t; ++i) {
    b.phi_hat[i] = product_without(i, none, none);
    b.psi_hat[i] = weighted_sum_without(i, none);
    b.theta_hat[i] = b.phi_hat[i] + b.psi_hat[i];
    for (std::size_t j = 0; j < t; ++j) {
      if (i == j) continue;
      b.phi_hat2[i][j] = product_without(i, j, none);
      b.psi_hat2[i][j] = weighted_sum_without(i, j);
    }
  }
  return b;
}

bool check_identities(const Partition& p) {
  const auto& sizes = p.sizes();
  const std::size_t t = sizes.size();
  const InvariantBundle d = direct_bundle(sizes);
  const InvariantBundle fast = compute_bundle(p);

  if (fast.phi != d.phi || fast.psi != d.psi || fast.theta != d.theta) return false;
  for (std::size_t i = 0; i < t; ++i) {
    if (fast.phi_hat[i] != d.phi_hat[i] || fast.psi_hat[i] != d.psi_hat[i] ||
        fast.theta_hat[i] != d.theta_hat[i]) {
      return false;
    }
    for (std::size_t j = 0; j < t; ++j) {
      if (i != j && (fast.phi_hat2[i][j] != d.phi_hat2[i][j] || fast.psi_hat2[i][j] != d.psi_hat2[i][j])) {
        return false;
      }
    }
  }

  Integer weighted = 0;
  for (std::size_t k = 0; k < t; ++k) weighted += Integer(sizes[k]) * d.phi_hat[k];

  for (std::size_t i = 0; i < t; ++i) {
    const Integer n_i(sizes[i]);
    const Integer f_i = factor(sizes[i]);
    if (d.theta != f_i * d.phi_hat[i] + weighted) return false;                  // (a)
    if (d.theta != f_i * d.theta_hat[i] + n_i * d.phi_hat[i]) return false;      // (b)
    if (d.psi != f_i * d.psi_hat[i] + n_i * d.phi_hat[i]) return false;          // (c)

    Integer via_pairs = 0;
    for (std::size_t k = 0; k < t; ++k) {
      if (k != i) via_pairs += Integer(sizes[k]) * d.phi_hat2[i][k];
    }
    if (d.psi_hat[i] != via_pairs) return false;
    for (std::size_t j = 0; j < t; ++j) {
      if (j == i) continue;
      if (d.psi_hat[i] != factor(sizes[j]) * d.psi_hat2[i][j] + Integer(sizes[j]) * d.phi_hat2[i][j]) {
        return false;  // (d)
      }
    }
  }
  return true;
}

Integer det_delta_closed(const Partition& p) {
  return power_minus_four(p.order() - p.parts()) * compute_bundle(p).theta;
}

Integer cof_delta_closed(const Partition& p) {
  return power_minus_four(p.order() - p.parts()) * compute_bundle(p).psi;
}

Rational lambda(const InvariantBundle& b) {
  require_psi(b.psi);
  Rational out(b.theta, b.psi);
  out.canonicalize();
  return out;
}

Rational lambda(const Partition& p) { return lambda(compute_bundle(p)); }

std::vector<Rational> nu(const Partition& p, const InvariantBundle& b) {
  require_psi(b.psi);
  std::vector<Rational> out;
  out.reserve(p.order());
  for (std::size_t i = 0; i < p.parts(); ++i) {
    Rational value(b.phi_hat[i], b.psi);
    value.canonicalize();
    out.insert(out.end(), p.size_of(i), value);
  }
  return out;
}

std::vector<Rational> nu(const Partition& p) { return nu(p, compute_bundle(p)); }

Integer det_c_m_closed(std::span<const std::uint32_t> sizes) {
  Integer out = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    Integer term(sizes[i]);
    for (std::size_t j = 0; j < sizes.size(); ++j) {
      if (j != i) term *= factor(sizes[j]);
    }
    out += term;
  }
  return out;
}

}  // namespace sqdm
