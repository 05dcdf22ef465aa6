#include "logmc/cli.hpp"

#include "logmc/curves.hpp"
#include "logmc/errors.hpp"
#include "logmc/hirzebruch.hpp"
#include "logmc/json_io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace logmc::cli {

Command parse_command(const std::string& text) {
  static const std::map<std::string, Command> table{
      {"lattice", Command::lattice}, {"charpoly", Command::charpoly}, {"exponents", Command::exponents},
      {"mc", Command::mc},           {"logclass", Command::logclass}, {"diff", Command::diff},
      {"csm", Command::csm},         {"euler", Command::euler},       {"curve", Command::curve}};
  const auto it = table.find(text);
  if (it == table.end()) throw ParseError("unknown command '" + text + "'");
  return it->second;
}

OutputFormat parse_format(const std::string& text) {
  if (text == "text") return OutputFormat::text;
  if (text == "json") return OutputFormat::json;
  throw ParseError("unknown output format '" + text + "' (expected text or json)");
}

McRoute parse_route(const std::string& text) {
  if (text == "lattice") return McRoute::lattice;
  if (text == "charpoly") return McRoute::charpoly;
  if (text == "exponents") return McRoute::exponents;
  if (text == "all") return McRoute::all;
  throw ParseError("unknown route '" + text + "' (expected lattice, charpoly, exponents or all)");
}

std::string to_string(McRoute route) {
  switch (route) {
    case McRoute::lattice: return "lattice";
    case McRoute::charpoly: return "charpoly";
    case McRoute::exponents: return "exponents";
    case McRoute::all: return "all";
  }
  return "all";
}

std::size_t max_lattice_from_env() {
  const char* raw = std::getenv("LOGMC_MAX_LATTICE");
  if (raw == nullptr || *raw == '\0') return kDefaultMaxLatticeNodes;
  try {
    std::size_t used = 0;
    const unsigned long long value = std::stoull(raw, &used);
    if (used != std::string(raw).size() || value == 0) throw std::invalid_argument("");
    return static_cast<std::size_t>(value);
  } catch (const std::exception&) {
    throw ValidationError(std::string("LOGMC_MAX_LATTICE must be a positive integer, got '") + raw + "'");
  }
}

namespace {

struct Report {
  Json json;
  std::ostringstream text;
  bool consistent = true;
};

struct ArrangementContext {
  Arrangement arrangement;
  IntersectionLattice lattice;
  IntPolynomial chi;
  TeraoResult terao;
  std::optional<Exponents> exponents;
  std::string exponent_source;  // "override", "terao" or ""

  std::size_t n() const { return arrangement.projective_dim(); }
};

ArrangementContext load_arrangement(const RunConfig& config) {
  Arrangement arrangement = read_arrangement_file(config.input_path);
  IntersectionLattice lattice = build_lattice(arrangement, config.max_lattice_nodes);
  IntPolynomial chi = characteristic_polynomial(lattice);
  TeraoResult terao = exponents_via_terao(chi);
  ArrangementContext ctx{std::move(arrangement), std::move(lattice), std::move(chi), std::move(terao), {}, {}};
  if (config.exponents_override) {
    validate_exponents(*config.exponents_override, ctx.n());
    ctx.exponents = config.exponents_override;
    ctx.exponent_source = "override";
  } else if (ctx.terao.splits &&
             std::find(ctx.terao.roots.begin(), ctx.terao.roots.end(), 1L) != ctx.terao.roots.end()) {
    ctx.exponents = ctx.terao.roots;
    ctx.exponent_source = "terao";
  }
  return ctx;
}

const Exponents& require_exponents(const ArrangementContext& ctx) {
  if (!ctx.exponents) {
    throw ValidationError(
        "no exponent data: the characteristic polynomial does not split with a root 1; pass --exponents");
  }
  return *ctx.exponents;
}

Json exponents_json(const ArrangementContext& ctx) {
  if (!ctx.exponents) return nullptr;
  return Json{{"values", *ctx.exponents}, {"source", ctx.exponent_source}};
}

struct McResult {
  std::vector<std::pair<std::string, KPoly>> routes;
  bool agree = true;
  KPoly chosen;
};

McResult compute_mc(const ArrangementContext& ctx, McRoute route) {
  const std::size_t n = ctx.n();
  McResult result{{}, true, KPoly(n)};
  if (route == McRoute::lattice || route == McRoute::all)
    result.routes.emplace_back("lattice", mc_complement_lattice_sum(ctx.lattice));
  if (route == McRoute::charpoly || route == McRoute::all)
    result.routes.emplace_back("charpoly", mc_complement_charpoly(ctx.chi, n));
  if (route == McRoute::exponents) result.routes.emplace_back("exponents", mc_free_exponents(require_exponents(ctx), n));
  if (route == McRoute::all && ctx.exponents)
    result.routes.emplace_back("exponents", mc_free_exponents(*ctx.exponents, n));
  result.chosen = result.routes.front().second;
  for (const auto& [name, value] : result.routes)
    if (!(value == result.chosen)) result.agree = false;
  return result;
}

Json mc_routes_json(const McResult& mc, KBasis basis) {
  Json routes = Json::object();
  for (const auto& [name, value] : mc.routes) routes[name] = kpoly_to_json(value, basis);
  return routes;
}

void mc_routes_text(std::ostream& out, const McResult& mc, KBasis basis) {
  for (const auto& [name, value] : mc.routes) out << "  route " << name << ": " << render(value, basis) << "\n";
  if (mc.routes.size() > 1) out << "routes agree: " << (mc.agree ? "yes" : "NO") << "\n";
}

std::string basis_note(KBasis basis) { return basis == KBasis::s ? "s = [O(-1)]" : "(1-s) = [O_H], s = [O(-1)]"; }

// --- commands ---------------------------------------------------------------

void cmd_lattice(const RunConfig& config, Report& r) {
  const auto ctx = load_arrangement(config);
  r.json = lattice_to_json(ctx.lattice);
  auto& t = r.text;
  t << "ambient dimension " << ctx.lattice.ambient_dim() << ", " << ctx.lattice.num_hyperplanes()
    << " hyperplanes, " << ctx.lattice.size() << " lattice nodes\n";
  t << "dim  mobius  hyperplanes\n";
  for (const auto& node : ctx.lattice.nodes()) {
    t << node.subspace.dim() << "    " << node.mobius << "    {";
    for (std::size_t i = 0; i < node.hyperplanes.size(); ++i) t << (i ? "," : "") << node.hyperplanes[i];
    t << "}\n";
  }
}

void cmd_charpoly(const RunConfig& config, Report& r) {
  const auto ctx = load_arrangement(config);
  r.json = Json{{"ambient_dim", ctx.arrangement.ambient_dim()},
                {"coeffs_t", intpoly_to_json(ctx.chi)},
                {"text", ctx.chi.to_string()}};
  r.text << ctx.chi.to_string() << "\n";
}

void cmd_exponents(const RunConfig& config, Report& r) {
  const auto ctx = load_arrangement(config);
  r.json = terao_to_json(ctx.terao);
  if (ctx.terao.splits) {
    r.text << format_exponents(ctx.terao.roots) << "\n";
    r.text << "# candidate exponents: a split characteristic polynomial does not certify freeness\n";
  } else {
    r.text << "does not split: remaining factor " << ctx.terao.remaining.to_string()
           << " has no integer root; the arrangement is not free\n";
  }
}

void cmd_mc(const RunConfig& config, Report& r) {
  const auto ctx = load_arrangement(config);
  const McResult mc = compute_mc(ctx, config.mc_route);
  r.consistent = mc.agree;
  r.json = Json{{"n", ctx.n()},
                {"route", to_string(config.mc_route)},
                {"routes", mc_routes_json(mc, config.basis)},
                {"agree", mc.agree},
                {"exponents", exponents_json(ctx)},
                {"mc", kpoly_to_json(mc.chosen, config.basis)}};
  r.text << "mC_y(complement) on P^" << ctx.n() << " in basis " << basis_note(config.basis) << ":\n";
  r.text << "  " << render(mc.chosen, config.basis) << "\n";
  mc_routes_text(r.text, mc, config.basis);
}

void cmd_logclass(const RunConfig& config, Report& r) {
  const auto ctx = load_arrangement(config);
  const Exponents& exps = require_exponents(ctx);
  const KPoly log = log_class_free(exps, ctx.n());
  r.json = Json{{"n", ctx.n()}, {"exponents", exponents_json(ctx)}, {"log_class", kpoly_to_json(log, config.basis)}};
  r.text << "exponents " << format_exponents(exps) << " (" << ctx.exponent_source << ")\n";
  r.text << "sum_p Omega^p(log A) y^p (x) O(-A) in basis " << basis_note(config.basis) << ":\n";
  r.text << "  " << render(log, config.basis) << "\n";
}

void cmd_diff(const RunConfig& config, Report& r) {
  const auto ctx = load_arrangement(config);
  const Exponents& exps = require_exponents(ctx);
  const McResult mc = compute_mc(ctx, config.mc_route);
  const KPoly log = log_class_free(exps, ctx.n());
  const KPoly difference = mc.chosen - log;
  r.consistent = mc.agree;
  r.json = Json{{"n", ctx.n()},
                {"exponents", exponents_json(ctx)},
                {"route", to_string(config.mc_route)},
                {"routes_agree", mc.agree},
                {"mc", kpoly_to_json(mc.chosen, config.basis)},
                {"log_class", kpoly_to_json(log, config.basis)},
                {"difference", kpoly_to_json(difference, config.basis)},
                {"is_zero", difference.is_zero()}};
  r.text << "exponents " << format_exponents(exps) << " (" << ctx.exponent_source << "), basis "
         << basis_note(config.basis) << "\n";
  r.text << "mC_y     : " << render(mc.chosen, config.basis) << "\n";
  r.text << "log class: " << render(log, config.basis) << "\n";
  r.text << "difference: " << render(difference, config.basis) << "\n";
  r.text << "is_zero=" << (difference.is_zero() ? "true" : "false") << "\n";
  if (!mc.agree) mc_routes_text(r.text, mc, config.basis);
}

void cmd_csm(const RunConfig& config, Report& r) {
  const auto ctx = load_arrangement(config);
  const std::size_t n = ctx.n();
  const McResult mc = compute_mc(ctx, config.mc_route);
  const CohClass csm_mc = csm_at_minus_one(mc.chosen);

  Json json{{"n", n},
            {"exponents", exponents_json(ctx)},
            {"routes_agree", mc.agree},
            {"csm_mc", cohclass_to_json(csm_mc)},
            {"euler_characteristic", to_fraction_string(euler_characteristic(csm_mc))}};
  bool consistent = mc.agree;
  r.text << "c_*(1_M) from mC_y          : " << csm_mc.to_string() << "\n";

  if (ctx.exponents) {
    const CohClass product = CohClass::split_chern_product(*ctx.exponents, n);
    json["product_formula"] = cohclass_to_json(product);
    const bool mc_product = csm_mc == product;
    json["mc_equals_product"] = mc_product;
    consistent = consistent && mc_product;
    try {
      const CohClass csm_log = csm_at_minus_one(log_class_free(*ctx.exponents, n));
      const bool mc_log = csm_mc == csm_log;
      const bool log_product = csm_log == product;
      json["csm_log"] = cohclass_to_json(csm_log);
      json["mc_equals_log"] = mc_log;
      json["log_equals_product"] = log_product;
      consistent = consistent && mc_log && log_product;
      r.text << "c(Der(-log A)) from log class: " << csm_log.to_string() << "\n";
    } catch (const CohomologyDivisionError& e) {
      // The log class is not a priori motivic; a non-polynomial T_y is a finding.
      json["csm_log"] = nullptr;
      json["log_polynomiality_failure"] = std::string(e.what()) + ": " + e.diagnostic();
      consistent = false;
      r.text << "c(Der(-log A)) from log class: NOT POLYNOMIAL (" << e.what() << ")\n";
    }
    r.text << "prod (1 + (1 - e_i) h)       : " << product.to_string() << "\n";
  } else {
    json["csm_log"] = nullptr;
    json["product_formula"] = nullptr;
    r.text << "no exponents: log-side class and product formula unavailable\n";
  }
  json["all_equal"] = consistent;
  r.text << "all equal: " << (consistent ? "yes" : "NO") << "\n";
  r.text << "Euler characteristic: " << to_display_string(euler_characteristic(csm_mc)) << "\n";
  r.consistent = consistent;
  r.json = std::move(json);
}

void cmd_euler(const RunConfig& config, Report& r) {
  const auto ctx = load_arrangement(config);
  const McResult mc = compute_mc(ctx, config.mc_route);
  const Rational from_csm = euler_characteristic(csm_at_minus_one(mc.chosen));
  Integer from_lattice = 0;
  for (const auto& node : ctx.lattice.nodes()) from_lattice += node.mobius * node.subspace.dim();
  const bool agree = from_csm == Rational(from_lattice);
  r.consistent = agree && mc.agree;
  r.json = Json{{"from_csm", to_fraction_string(from_csm)},
                {"from_lattice", integer_to_json(from_lattice)},
                {"agree", agree}};
  r.text << "Euler characteristic: " << to_display_string(from_csm) << " (lattice sum " << from_lattice << ", "
         << (agree ? "agrees" : "DISAGREES") << ")\n";
}

void cmd_curve(const RunConfig& config, Report& r) {
  std::ifstream in(config.input_path);
  if (!in) throw ParseError("cannot open singularity file '" + config.input_path.string() + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  const auto inputs = parse_singularities(doc);
  std::vector<CurveSingularity> sings;
  for (const auto& i : inputs) sings.push_back(i.singularity);
  const CurveDifferenceClass diff = difference_class_curve(sings);
  const std::vector<long> csm_gap = csm_minus_chern_curve(sings);

  Json points = Json::array();
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    Json p = singularity_to_json(sings[i]);
    p["label"] = inputs[i].label;
    if (!inputs[i].poly.empty()) p["poly"] = inputs[i].poly;
    p["difference"] = Json{{"a", diff.points[i].a}, {"b", diff.points[i].b}};
    p["genus_defect"] = genus_defect(sings[i]);
    p["csm_minus_chern"] = csm_gap[i];
    points.push_back(std::move(p));
  }
  const PointTerm total = diff.total();
  r.json = Json{{"points", std::move(points)},
                {"total", Json{{"a", total.a}, {"b", total.b}}},
                {"is_zero", diff.is_zero()}};

  auto& t = r.text;
  t << "difference class = sum_x (a_x + b_x y) [O_x]\n";
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const auto& s = sings[i];
    t << inputs[i].label << ": mu=" << s.mu() << " tau=" << s.tau() << " r=" << s.r() << " delta=" << s.delta()
      << "  ->  (a, b) = (" << diff.points[i].a << ", " << diff.points[i].b << ")"
      << ", genus defect " << genus_defect(s) << ", tau - mu = " << csm_gap[i] << "\n";
  }
  t << "total: (" << total.a << ", " << total.b << "), is_zero=" << (diff.is_zero() ? "true" : "false") << "\n";
}

void emit_error(const RunConfig& config, std::ostream& out, std::ostream& err, const std::string& kind,
                const std::string& message, const std::string& diagnostic) {
  if (config.output_format == OutputFormat::json) {
    Json e{{"kind", kind}, {"message", message}};
    if (!diagnostic.empty()) e["diagnostic"] = diagnostic;
    out << Json{{"error", e}}.dump(2) << "\n";
  } else {
    err << "logmc: " << message << "\n";
    if (!diagnostic.empty()) err << "  " << diagnostic << "\n";
  }
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Report report;
  try {
    switch (config.command) {
      case Command::lattice: cmd_lattice(config, report); break;
      case Command::charpoly: cmd_charpoly(config, report); break;
      case Command::exponents: cmd_exponents(config, report); break;
      case Command::mc: cmd_mc(config, report); break;
      case Command::logclass: cmd_logclass(config, report); break;
      case Command::diff: cmd_diff(config, report); break;
      case Command::csm: cmd_csm(config, report); break;
      case Command::euler: cmd_euler(config, report); break;
      case Command::curve: cmd_curve(config, report); break;
    }
  } catch (const ValidationError& e) {
    emit_error(config, out, err, "validation", e.what(), "");
    return kExitInputError;
  } catch (const InconsistencyError& e) {
    emit_error(config, out, err, "inconsistency", e.what(), e.diagnostic());
    return kExitInconsistent;
  } catch (const std::exception& e) {
    emit_error(config, out, err, "internal", e.what(), "");
    return kExitInconsistent;
  }

  if (config.output_format == OutputFormat::json) {
    Json doc = std::move(report.json);
    doc["command"] = [&] {
      static const char* names[] = {"lattice", "charpoly", "exponents", "mc", "logclass",
                                    "diff",    "csm",      "euler",     "curve"};
      return names[static_cast<int>(config.command)];
    }();
    out << doc.dump(2) << "\n";
  } else {
    out << report.text.str();
  }
  if (!report.consistent) {
    err << "logmc: exact identity check failed (see report)\n";
    return kExitInconsistent;
  }
  return kExitOk;
}

}  // namespace logmc::cli
