#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sqdm/exact_linalg.hpp"
#include "sqdm/invariants.hpp"
#include "sqdm/matrices.hpp"
#include "sqdm/partition.hpp"
#include "sqdm/rational_matrix.hpp"
#include "sqdm/verify.hpp"

namespace sqdm {

/// Vertex order note attached to every serialized matrix.
inline constexpr const char* kVertexOrder =
    "rows and columns follow canonical block order: parts sorted by non-increasing size, "
    "vertices of each part contiguous";

nlohmann::json to_json(const Partition& p);
/// Integers are emitted as decimal strings.
nlohmann::json to_json(const InvariantBundle& b);
nlohmann::json to_json(const Classification& c);
nlohmann::json to_json(const LaplacianCoefficients& c);
nlohmann::json to_json(const RationalMatrix& m);
nlohmann::json to_json(const CharPoly& p);
nlohmann::json to_json(const Inertia& in);
nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const ConjectureReport& r);
nlohmann::json to_json(const std::vector<Rational>& v);

/// Headerless CSV of fraction strings, one matrix row per line.
std::string to_csv(const RationalMatrix& m);

/// Fixed-width text layout of a matrix.
std::string to_pretty(const RationalMatrix& m);

/// Compact single-line form "[[a,b],[c,d]]" used in check witnesses.
std::string to_compact(const RationalMatrix& m);
std::string to_compact(const std::vector<Rational>& v);

/// Everything the `info` command reports: sizes, invariants, det, cof,
/// lambda (null when psi = 0), classification.
nlohmann::json info_json(const Partition& p);

}  // namespace sqdm
