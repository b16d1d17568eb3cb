#include "sqdm/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <queue>
#include <thread>

#include "sqdm/invariants.hpp"
#include "sqdm/matrices.hpp"
#include "sqdm/serialize.hpp"

namespace sqdm {

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed; }));
}

RationalMatrix bfs_distance_matrix(const Partition& p) {
  const std::size_t n = p.order();
  std::vector<std::vector<std::size_t>> adjacency(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (p.part_of(u) != p.part_of(v)) adjacency[u].push_back(v);
    }
  }

  RationalMatrix out(n, true);
  constexpr std::size_t unreached = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dist(n);
  std::queue<std::size_t> frontier;
  for (std::size_t source = 0; source < n; ++source) {
    std::fill(dist.begin(), dist.end(), unreached);
    dist[source] = 0;
    frontier.push(source);
    while (!frontier.empty()) {
      const std::size_t u = frontier.front();
      frontier.pop();
      for (auto v : adjacency[u]) {
        if (dist[v] == unreached) {
          dist[v] = dist[u] + 1;
          frontier.push(v);
        }
      }
    }
    for (std::size_t v = 0; v < n; ++v) {
      out(source, v) = static_cast<unsigned long>(dist[v] * dist[v]);
    }
  }
  return out;
}

namespace {

constexpr const char* kPsiZero = "cofactor sum is zero";
constexpr const char* kThetaZero = "determinant is zero";

class ReportBuilder {
 public:
  explicit ReportBuilder(const Partition& p) : report_{p, {}, {}} {}

  void check(std::string name, bool passed, std::string witness) {
    report_.checks.push_back({std::move(name), passed, std::move(witness)});
  }
  void skip(std::string name, std::string reason) { report_.skipped.push_back({std::move(name), std::move(reason)}); }

  VerificationReport take() { return std::move(report_); }

 private:
  VerificationReport report_;
};

std::string pair_witness(const std::string& lhs_name, const Rational& lhs, const std::string& rhs_name,
                         const Rational& rhs) {
  return lhs_name + "=" + to_string(lhs) + " " + rhs_name + "=" + to_string(rhs);
}

// Identity witness on success, the offending product on failure.
std::string identity_witness(const RationalMatrix& product, bool passed) {
  return passed ? std::string("identity") : to_compact(product);
}

RationalMatrix ones_outer(const std::vector<Rational>& v) {
  std::vector<Rational> ones(v.size(), Rational(1));
  return outer(v, ones);
}

}  // namespace

VerificationReport verify_partition(const Partition& p) {
  ReportBuilder r(p);
  const std::size_t n = p.order();
  const std::size_t t = p.parts();
  const std::size_t h = p.unit_parts();
  const std::size_t s = p.big_parts();

  const InvariantBundle bundle = compute_bundle(p);
  const Classification cls = classify(p);
  const RationalMatrix delta = build_delta(p);
  const RationalMatrix identity = RationalMatrix::identity(n);

  {
    const RationalMatrix bfs = bfs_distance_matrix(p);
    r.check("bfs_distance", bfs == delta, bfs == delta ? "match" : to_compact(bfs));
  }

  const Rational det_closed(det_delta_closed(p));
  const Rational cof_closed(cof_delta_closed(p));
  const Rational det_oracle = det_bareiss(delta);
  const Rational cof_reduced = cofactor_sum(delta);
  const Rational cof_adjugate = cofactor_sum_adjugate(delta);

  r.check("det_closed", det_closed == det_oracle, pair_witness("closed", det_closed, "bareiss", det_oracle));
  r.check("cof_closed_reduction", cof_closed == cof_reduced,
          pair_witness("closed", cof_closed, "reduction", cof_reduced));
  r.check("cof_closed_adjugate", cof_closed == cof_adjugate,
          pair_witness("closed", cof_closed, "adjugate", cof_adjugate));

  {
    const Rational closed(det_c_m_closed(p.sizes()));
    const Rational oracle = det_bareiss(build_c_m(p.sizes()));
    r.check("det_c_m", closed == oracle, pair_witness("closed", closed, "bareiss", oracle));
  }

  {
    bool ok = cls.det_zero == (sgn(det_oracle) == 0) && cls.cof_zero == (sgn(cof_reduced) == 0);
    // Necessary ranges: det zero => t/4 + 3/4 < h <= t/2 + 1/2, cof zero => t/4 < h <= t/2.
    const long hh = static_cast<long>(h);
    const long tt = static_cast<long>(t);
    if (cls.det_zero) ok = ok && (4 * hh > tt + 3) && (2 * hh <= tt + 1);
    if (cls.cof_zero) ok = ok && (4 * hh > tt) && (2 * hh <= tt);
    r.check("vanishing", ok,
            "margin=" + to_string(cls.margin) + " cof_margin=" + to_string(cls.cof_margin) +
                " det=" + to_string(det_oracle) + " cof=" + to_string(cof_reduced));
  }

  r.check("identities", check_identities(p), "phi=" + bundle.phi.get_str() + " psi=" + bundle.psi.get_str() +
                                                 " theta=" + bundle.theta.get_str());

  const bool psi_ok = bundle.psi != 0;
  const bool theta_ok = bundle.theta != 0;

  std::optional<RationalMatrix> laplacian;
  std::optional<std::vector<Rational>> nu_vec;
  std::optional<std::size_t> mult_quarter;
  std::optional<std::size_t> mult_one;
  if (psi_ok) {
    const Rational lam = lambda(bundle);
    r.check("lambda_ratio", lam * cof_closed == det_closed,
            "lambda=" + to_string(lam) + " " + pair_witness("lambda*cof", lam * cof_closed, "det", det_closed));

    nu_vec = nu(p, bundle);
    Rational total = 0;
    for (const auto& x : *nu_vec) total += x;
    r.check("nu_sum", total == 1, "sum=" + to_string(total));

    const auto lhs = delta * std::span<const Rational>(*nu_vec);
    const bool ok = std::all_of(lhs.begin(), lhs.end(), [&](const Rational& x) { return x == lam; });
    r.check("delta_nu", ok, ok ? "lambda=" + to_string(lam) : to_compact(lhs));

    laplacian = build_laplacian_like(p);
    const auto coeffs = laplacian_coefficients(bundle, p.sizes());
    bool structure = laplacian->is_symmetric();
    for (std::size_t i = 0; i < n; ++i) {
      Rational row_sum = 0;
      Rational col_sum = 0;
      for (std::size_t j = 0; j < n; ++j) {
        row_sum += (*laplacian)(i, j);
        col_sum += (*laplacian)(j, i);
      }
      structure = structure && row_sum == 0 && col_sum == 0;
    }
    for (std::size_t i = 0; i < t; ++i) {
      structure = structure && coeffs.diagonal[i] - coeffs.within[i] == Rational(1, 4);
    }
    r.check("laplacian_structure", structure, structure ? "symmetric, zero sums, a-b=1/4" : to_compact(*laplacian));

    const RationalMatrix product = *laplacian * delta + identity;
    const bool ld_ok = product == ones_outer(*nu_vec);
    r.check("laplacian_delta", ld_ok, ld_ok ? "nu 1^T" : to_compact(product));

    const std::size_t lrank = rank(*laplacian);
    r.check("laplacian_rank", lrank == n - 1, "rank=" + std::to_string(lrank) + " n-1=" + std::to_string(n - 1));

    // Every cofactor of L equals (-1)^(n-1) / cof Delta.
    const Rational expected = Rational(n % 2 == 1 ? 1 : -1) / cof_closed;
    const std::size_t rows = n <= kAllCofactorsMaxOrder ? n : 1;
    bool ok_cof = true;
    std::string witness = "expected=" + to_string(expected) + (rows == n ? " all entries" : " first row");
    for (std::size_t i = 0; i < rows && ok_cof; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Rational c = cofactor(*laplacian, i, j);
        if (c != expected) {
          ok_cof = false;
          witness += " cofactor(" + std::to_string(i) + "," + std::to_string(j) + ")=" + to_string(c);
          break;
        }
      }
    }
    r.check("laplacian_cofactors", ok_cof, witness);

    mult_quarter = eigen_multiplicity(*laplacian, Rational(1, 4));
    const std::size_t mq = *mult_quarter;
    r.check("mult_quarter_lower", mq >= n - t, "mult=" + std::to_string(mq) + " n-t=" + std::to_string(n - t));
    if (h >= 2) {
      mult_one = eigen_multiplicity(*laplacian, Rational(1));
      const std::size_t m1 = *mult_one;
      r.check("mult_one_lower", m1 + 1 >= h, "mult=" + std::to_string(m1) + " h-1=" + std::to_string(h - 1));
    } else {
      r.skip("mult_one_lower", "fewer than two unit parts");
    }
  } else {
    for (const char* name : {"lambda_ratio", "nu_sum", "delta_nu", "laplacian_structure", "laplacian_delta",
                             "laplacian_rank", "laplacian_cofactors", "mult_quarter_lower", "mult_one_lower"}) {
      r.skip(name, kPsiZero);
    }
  }

  std::optional<RationalMatrix> block;
  if (theta_ok) {
    block = inverse_block_form(p);
    const RationalMatrix left = delta * *block;
    const RationalMatrix right = *block * delta;
    const bool ok = left == identity && right == identity;
    r.check("inverse_block", ok, identity_witness(left == identity ? right : left, ok));

    const RationalMatrix gauss = inverse_gauss(delta);
    r.check("inverse_gauss_agreement", gauss == *block, gauss == *block ? "match" : to_compact(gauss));
  } else {
    r.skip("inverse_block", kThetaZero);
    r.skip("inverse_gauss_agreement", kThetaZero);
  }

  const char* both_reason = !theta_ok ? kThetaZero : kPsiZero;
  if (theta_ok && psi_ok) {
    const RationalMatrix x = inverse_rank_one(p);
    const RationalMatrix left = delta * x;
    const RationalMatrix right = x * delta;
    const bool ok = left == identity && right == identity;
    r.check("inverse_rank_one", ok, identity_witness(left == identity ? right : left, ok));
    r.check("inverse_agreement", x == *block, x == *block ? "match" : to_compact(x));

    const std::size_t mq = *mult_quarter;
    r.check("mult_quarter_exact", mq == n - t, "mult=" + std::to_string(mq) + " n-t=" + std::to_string(n - t));
    if (mult_one) {
      const std::size_t m1 = *mult_one;
      r.check("mult_one_exact", m1 + 1 == h, "mult=" + std::to_string(m1) + " h-1=" + std::to_string(h - 1));
    } else {
      r.skip("mult_one_exact", "fewer than two unit parts");
    }

    const Inertia in = inertia(*laplacian);
    // Positive margin: (n-s-1, 1, s). Negative margin: (n-s, 1, s-1); with
    // h = 0 this is (n-t, 1, t-1).
    const Inertia expected_in = sgn(cls.margin) > 0 ? Inertia{n - s - 1, 1, s} : Inertia{n - s, 1, s - 1};
    r.check("laplacian_inertia", in == expected_in,
            "inertia=(" + std::to_string(in.positive) + "," + std::to_string(in.zero) + "," +
                std::to_string(in.negative) + ") expected=(" + std::to_string(expected_in.positive) + "," +
                std::to_string(expected_in.zero) + "," + std::to_string(expected_in.negative) + ")");
  } else {
    for (const char* name : {"inverse_rank_one", "inverse_agreement", "mult_quarter_exact",
                             "mult_one_exact", "laplacian_inertia"}) {
      r.skip(name, both_reason);
    }
  }

  return r.take();
}

std::optional<ConjectureReport> conjecture_report(const Partition& p) {
  const InvariantBundle bundle = compute_bundle(p);
  if (bundle.theta != 0 || bundle.psi == 0) return std::nullopt;

  const RationalMatrix laplacian = build_laplacian_like(p);
  ConjectureReport rep{p, 0, 0, Inertia{}, false, false, false};
  rep.mult_quarter = eigen_multiplicity(laplacian, Rational(1, 4));
  rep.mult_one = eigen_multiplicity(laplacian, Rational(1));
  rep.inertia = inertia(laplacian);

  const std::size_t n = p.order();
  const std::size_t t = p.parts();
  const std::size_t h = p.unit_parts();
  const std::size_t s = p.big_parts();
  rep.positives_exhausted = rep.inertia.positive == rep.mult_quarter + rep.mult_one;
  rep.clause_i_holds = rep.positives_exhausted && rep.mult_quarter == n - t && rep.mult_one + 1 == h;
  rep.clause_ii_holds = rep.inertia == Inertia{n - s - 1, 1, s};
  return rep;
}

std::size_t default_workers() {
  if (const char* env = std::getenv("SQDM_WORKERS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

// Applies `work` to every item on `workers` threads; results keep input order.
template <typename Out, typename Work>
std::vector<Out> parallel_map(const std::vector<Partition>& items, std::size_t workers, Work work) {
  std::vector<Out> results(items.size());
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) results[i] = work(items[i]);
  };
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(items.size(), 1));
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(run);
    run();
  }
  return results;
}

}  // namespace

void scan(std::size_t n_max, std::size_t workers, const std::function<void(const VerificationReport&)>& sink) {
  const auto partitions = all_partitions(n_max);
  auto reports = parallel_map<std::optional<VerificationReport>>(
      partitions, workers, [](const Partition& p) { return std::optional(verify_partition(p)); });
  for (const auto& rep : reports) sink(*rep);
}

std::vector<ConjectureReport> conjecture_scan(std::size_t n_max, std::size_t workers) {
  std::vector<Partition> singular;
  enumerate_partitions(n_max, [&](const Partition& p) {
    if (classify(p).det_zero) singular.push_back(p);
    return true;
  });
  auto reports = parallel_map<std::optional<ConjectureReport>>(singular, workers, conjecture_report);
  std::vector<ConjectureReport> out;
  for (auto& rep : reports) {
    if (rep) out.push_back(std::move(*rep));
  }
  return out;
}

}  // namespace sqdm
