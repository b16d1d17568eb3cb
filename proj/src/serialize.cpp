#include "sqdm/serialize.hpp"

#include <algorithm>
#include <sstream>

#include "sqdm/error.hpp"

namespace sqdm {

using nlohmann::json;

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw Error(ErrorCode::Parse, "cannot parse rational '" + text + "'");
  }
  q.canonicalize();
  return q;
}

json to_json(const Partition& p) {
  return {{"sizes", p.sizes()}, {"n", p.order()}, {"t", p.parts()}, {"h", p.unit_parts()}, {"s", p.big_parts()}};
}

namespace {

json integers(const std::vector<Integer>& v) {
  json out = json::array();
  for (const auto& z : v) out.push_back(z.get_str());
  return out;
}

// Off-diagonal table; diagonal entries are undefined and emitted as null.
json integer_table(const std::vector<std::vector<Integer>>& v) {
  json out = json::array();
  for (std::size_t i = 0; i < v.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < v[i].size(); ++j) {
      if (i == j) {
        row.push_back(nullptr);
      } else {
        row.push_back(v[i][j].get_str());
      }
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

json to_json(const InvariantBundle& b) {
  return {{"phi", b.phi.get_str()},
          {"psi", b.psi.get_str()},
          {"theta", b.theta.get_str()},
          {"phi_hat", integers(b.phi_hat)},
          {"psi_hat", integers(b.psi_hat)},
          {"theta_hat", integers(b.theta_hat)},
          {"phi_hat2", integer_table(b.phi_hat2)},
          {"psi_hat2", integer_table(b.psi_hat2)}};
}

json to_json(const Classification& c) {
  return {{"det_zero", c.det_zero},
          {"cof_zero", c.cof_zero},
          {"margin", to_string(c.margin)},
          {"cof_margin", to_string(c.cof_margin)}};
}

json to_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

json to_json(const LaplacianCoefficients& c) {
  json across = json::array();
  for (std::size_t i = 0; i < c.across.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < c.across[i].size(); ++j) {
      if (i == j) {
        row.push_back(nullptr);
      } else {
        row.push_back(to_string(c.across[i][j]));
      }
    }
    across.push_back(std::move(row));
  }
  return {{"diagonal", to_json(c.diagonal)}, {"within", to_json(c.within)}, {"across", std::move(across)}};
}

json to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.order(); ++i) {
    json row = json::array();
    for (const auto& q : m.row(i)) row.push_back(to_string(q));
    rows.push_back(std::move(row));
  }
  return {{"order", m.order()}, {"vertex_order", kVertexOrder}, {"entries", std::move(rows)}};
}

json to_json(const CharPoly& p) { return to_json(p.coeffs); }

json to_json(const Inertia& in) { return json::array({in.positive, in.zero, in.negative}); }

json to_json(const VerificationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"witness", c.witness}});
  }
  json skipped = json::array();
  for (const auto& s : r.skipped) skipped.push_back({{"name", s.name}, {"reason", s.reason}});
  return {{"type", "verification"},
          {"partition", to_json(r.partition)},
          {"passed", r.passed()},
          {"failures", r.failures()},
          {"checks", std::move(checks)},
          {"skipped", std::move(skipped)}};
}

json to_json(const ConjectureReport& r) {
  const auto& p = r.partition;
  return {{"type", "conjecture"},
          {"partition", to_json(p)},
          {"mult_quarter", r.mult_quarter},
          {"expected_mult_quarter", p.order() - p.parts()},
          {"mult_one", r.mult_one},
          {"expected_mult_one", p.unit_parts() - 1},
          {"inertia", to_json(r.inertia)},
          {"expected_inertia", json::array({p.order() - p.big_parts() - 1, 1, p.big_parts()})},
          {"positives_exhausted", r.positives_exhausted},
          {"conjecture_i_holds", r.clause_i_holds},
          {"conjecture_ii_holds", r.clause_ii_holds}};
}

std::string to_csv(const RationalMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.order(); ++i) {
    const auto row = m.row(i);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ',';
      out += to_string(row[j]);
    }
    out += '\n';
  }
  return out;
}

std::string to_pretty(const RationalMatrix& m) {
  std::size_t width = 1;
  std::vector<std::string> cells;
  cells.reserve(m.order() * m.order());
  for (std::size_t i = 0; i < m.order(); ++i) {
    for (const auto& q : m.row(i)) {
      cells.push_back(to_string(q));
      width = std::max(width, cells.back().size());
    }
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < m.order(); ++i) {
    for (std::size_t j = 0; j < m.order(); ++j) {
      const auto& cell = cells[i * m.order() + j];
      os << (j ? "  " : "") << std::string(width - cell.size(), ' ') << cell;
    }
    os << '\n';
  }
  return os.str();
}

std::string to_compact(const std::vector<Rational>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += to_string(v[i]);
  }
  return out + "]";
}

std::string to_compact(const RationalMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.order(); ++i) {
    if (i) out += ',';
    out += to_compact(std::vector<Rational>(m.row(i).begin(), m.row(i).end()));
  }
  return out + "]";
}

json info_json(const Partition& p) {
  const InvariantBundle b = compute_bundle(p);
  json out = to_json(p);
  out["phi"] = b.phi.get_str();
  out["psi"] = b.psi.get_str();
  out["theta"] = b.theta.get_str();
  out["det"] = det_delta_closed(p).get_str();
  out["cof"] = cof_delta_closed(p).get_str();
  out["lambda"] = b.psi == 0 ? json(nullptr) : json(to_string(lambda(b)));
  out["classification"] = to_json(classify(p));
  out["invariants"] = to_json(b);
  return out;
}

}  // namespace sqdm
