#pragma once

// JSON emission and ingestion. Integers are written as JSON numbers when they
// fit in 64 bits and as decimal strings otherwise; rationals are always
// "p/q" strings.

#include "logmc/arrangement.hpp"
#include "logmc/curves.hpp"
#include "logmc/hirzebruch.hpp"
#include "logmc/kring.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace logmc {

using Json = nlohmann::json;

Json integer_to_json(const Integer& v);
Integer integer_from_json(const Json& j);

/// { "n", "basis", "coeffs_y": [[...], ...] }, outer index = y-degree.
Json kpoly_to_json(const KPoly& p, KBasis basis);
KPoly kpoly_from_json(const Json& j);

/// { "n", "coeffs_h": ["p/q", ...] }
Json cohclass_to_json(const CohClass& c);
CohClass cohclass_from_json(const Json& j);

/// { "n", "denominator_power", "coeffs_y": [["p/q", ...], ...] }
Json cohpoly_to_json(const CohPoly& p);
CohPoly cohpoly_from_json(const Json& j);

Json lattice_to_json(const IntersectionLattice& lattice);
Json intpoly_to_json(const IntPolynomial& p);
Json terao_to_json(const TeraoResult& result);

/// One entry of a singularity file.
struct SingularityInput {
  std::string label;
  std::string poly;  // empty when given by invariants
  CurveSingularity singularity;
};

/// Accepts a single object, an array of objects, or {"singularities": [...]}.
/// Each object is {"poly": "...", "r"?: int} or {"mu", "tau", "r"}; "label"
/// is optional.
std::vector<SingularityInput> parse_singularities(const Json& doc);

Json singularity_to_json(const CurveSingularity& s);

}  // namespace logmc
