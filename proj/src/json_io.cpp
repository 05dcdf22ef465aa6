#include "logmc/json_io.hpp"

#include <limits>

namespace logmc {

Json integer_to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return Json(v.convert_to<std::int64_t>());
  return Json(v.str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const Rational q = parse_fraction(j.get<std::string>());
    if (denominator(q) != 1) throw ParseError("expected an integer, got " + j.dump());
    return numerator(q);
  }
  throw ParseError("expected an integer, got " + j.dump());
}

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field '") + name + "'");
  return j.at(name);
}

std::size_t size_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
    throw ParseError(std::string("field '") + name + "' must be a nonnegative integer");
  return v.get<std::size_t>();
}

const Json& array_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_array()) throw ParseError(std::string("field '") + name + "' must be an array");
  return v;
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_fraction(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw ParseError("expected a rational, got " + j.dump());
}

long long_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer()) throw ParseError(std::string("field '") + name + "' must be an integer");
  return v.get<long>();
}

}  // namespace

Json kpoly_to_json(const KPoly& p, KBasis basis) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) {
    Json row = Json::array();
    for (const auto& v : c.coeffs_in(basis)) row.push_back(integer_to_json(v));
    coeffs.push_back(std::move(row));
  }
  return Json{{"n", p.n()}, {"basis", to_string(basis)}, {"coeffs_y", std::move(coeffs)}};
}

KPoly kpoly_from_json(const Json& j) {
  const std::size_t n = size_field(j, "n");
  const Json& basis_field = field(j, "basis");
  if (!basis_field.is_string()) throw ParseError("field 'basis' must be a string");
  const KBasis basis = parse_kbasis(basis_field.get<std::string>());
  std::vector<KClass> coeffs;
  for (const auto& row : array_field(j, "coeffs_y")) {
    if (!row.is_array() || row.size() != n + 1)
      throw ParseError("each coeffs_y entry must hold n+1 integers, got " + row.dump());
    std::vector<Integer> values;
    for (const auto& v : row) values.push_back(integer_from_json(v));
    coeffs.push_back(basis == KBasis::s ? KClass::from_s_coeffs(n, std::move(values))
                                        : KClass::from_one_minus_s_coeffs(n, values));
  }
  return KPoly(n, std::move(coeffs));
}

Json cohclass_to_json(const CohClass& c) {
  Json coeffs = Json::array();
  for (const auto& q : c.coeffs()) coeffs.push_back(to_fraction_string(q));
  return Json{{"n", c.n()}, {"coeffs_h", std::move(coeffs)}};
}

CohClass cohclass_from_json(const Json& j) {
  const std::size_t n = size_field(j, "n");
  const Json& arr = array_field(j, "coeffs_h");
  if (arr.size() != n + 1) throw ParseError("coeffs_h must hold n+1 rationals");
  std::vector<Rational> coeffs;
  for (const auto& v : arr) coeffs.push_back(rational_from_json(v));
  return CohClass(n, std::move(coeffs));
}

Json cohpoly_to_json(const CohPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) {
    Json row = Json::array();
    for (const auto& q : c.coeffs()) row.push_back(to_fraction_string(q));
    coeffs.push_back(std::move(row));
  }
  return Json{{"n", p.n()}, {"denominator_power", p.denominator_power()}, {"coeffs_y", std::move(coeffs)}};
}

CohPoly cohpoly_from_json(const Json& j) {
  const std::size_t n = size_field(j, "n");
  const std::size_t delta = size_field(j, "denominator_power");
  std::vector<CohClass> coeffs;
  for (const auto& row : array_field(j, "coeffs_y")) {
    if (!row.is_array() || row.size() != n + 1) throw ParseError("each coeffs_y entry must hold n+1 rationals");
    std::vector<Rational> values;
    for (const auto& v : row) values.push_back(rational_from_json(v));
    coeffs.emplace_back(n, std::move(values));
  }
  return CohPoly(n, std::move(coeffs), delta);
}

Json lattice_to_json(const IntersectionLattice& lattice) {
  Json nodes = Json::array();
  for (const auto& node : lattice.nodes()) {
    Json equations = Json::array();
    for (const auto& row : node.subspace.equations()) {
      Json r = Json::array();
      for (const auto& q : row) r.push_back(to_fraction_string(q));
      equations.push_back(std::move(r));
    }
    nodes.push_back(Json{{"dim", node.subspace.dim()},
                         {"mobius", integer_to_json(node.mobius)},
                         {"hyperplanes", node.hyperplanes},
                         {"equations", std::move(equations)}});
  }
  return Json{{"ambient_dim", lattice.ambient_dim()},
              {"num_hyperplanes", lattice.num_hyperplanes()},
              {"node_count", lattice.size()},
              {"nodes", std::move(nodes)}};
}

Json intpoly_to_json(const IntPolynomial& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(integer_to_json(c));
  return coeffs;
}

Json terao_to_json(const TeraoResult& result) {
  Json out{{"splits", result.splits},
           {"roots_found", result.roots},
           {"remaining_factor", intpoly_to_json(result.remaining)},
           {"certifies_freeness", false}};
  out["exponents"] = result.splits ? Json(result.roots) : Json(nullptr);
  return out;
}

std::vector<SingularityInput> parse_singularities(const Json& doc) {
  Json items;
  if (doc.is_array())
    items = doc;
  else if (doc.is_object() && doc.contains("singularities"))
    items = array_field(doc, "singularities");
  else if (doc.is_object())
    items = Json::array({doc});
  else
    throw ParseError("singularity document must be an object or an array");

  std::vector<SingularityInput> out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const Json& item = items[i];
    if (!item.is_object()) throw ParseError("singularity " + std::to_string(i) + " is not an object");
    std::string label = "#" + std::to_string(i);
    if (item.contains("label")) {
      if (!item.at("label").is_string()) throw ParseError("field 'label' must be a string");
      label = item.at("label").get<std::string>();
    }
    if (item.contains("poly")) {
      if (!item.at("poly").is_string()) throw ParseError("field 'poly' must be a string");
      const std::string poly = item.at("poly").get<std::string>();
      std::optional<long> r;
      if (item.contains("r")) r = long_field(item, "r");
      out.push_back({label, poly, analyze_singularity(parse_local_polynomial(poly), r)});
    } else {
      const long mu = long_field(item, "mu");
      const long tau = long_field(item, "tau");
      const long r = long_field(item, "r");
      auto sing = item.contains("delta") ? CurveSingularity(mu, tau, r, long_field(item, "delta"))
                                         : CurveSingularity::from_milnor(mu, tau, r);
      out.push_back({label, "", sing});
    }
  }
  return out;
}

Json singularity_to_json(const CurveSingularity& s) {
  return Json{{"mu", s.mu()}, {"tau", s.tau()}, {"r", s.r()}, {"delta", s.delta()}};
}

}  // namespace logmc
