#include "logmc/cli.hpp"
#include "logmc/errors.hpp"
#include "logmc/json_io.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace logmc;
using namespace logmc::testing;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(cli::Command command, const std::string& input, cli::OutputFormat format = cli::OutputFormat::text,
                std::optional<Exponents> exponents = std::nullopt, KBasis basis = KBasis::one_minus_s,
                cli::McRoute route = cli::McRoute::all) {
  cli::RunConfig config;
  config.command = command;
  config.input_path = input;
  config.output_format = format;
  config.exponents_override = std::move(exponents);
  config.basis = basis;
  config.mc_route = route;
  std::ostringstream out, err;
  const int code = cli::run(config, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string first_line(const std::string& text) { return text.substr(0, text.find('\n')); }

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

int shell(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(LOGMC_BINARY) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

const std::vector<std::string> kArrangementCommands{"lattice", "charpoly", "exponents", "mc",
                                                    "logclass", "diff", "csm", "euler"};

}  // namespace

TEST_CASE("golden JSON outputs are reproduced bit for bit") {
  for (const auto& arr : corpus_arrangements())
    for (const auto& cmd : kArrangementCommands) {
      CAPTURE(arr);
      CAPTURE(cmd);
      const auto result = run_cli(cli::parse_command(cmd), arrangement_path(arr), cli::OutputFormat::json);
      CHECK(result.out == slurp(source_path("tests/golden/" + arr + "." + cmd + ".json")));
      // Only the arrangements without exponent data refuse the log side.
      const bool refuses = (arr == "generic4" || arr == "empty") && (cmd == "logclass" || cmd == "diff");
      CHECK(result.code == (refuses ? cli::kExitInputError : cli::kExitOk));
    }
  for (const std::string sing : {"node", "cusp", "tacnode", "triple_point", "all"}) {
    CAPTURE(sing);
    const auto result =
        run_cli(cli::Command::curve, source_path("data/singularities/" + sing + ".json"), cli::OutputFormat::json);
    CHECK(result.code == cli::kExitOk);
    CHECK(result.out == slurp(source_path("tests/golden/" + sing + ".curve.json")));
  }
}

TEST_CASE("text output of the worked examples") {
  CHECK(first_line(run_cli(cli::Command::exponents, arrangement_path("boolean3")).out) == "{1,1,1}");
  CHECK(first_line(run_cli(cli::Command::exponents, arrangement_path("braid")).out) == "{1,2,3}");
  CHECK(contains(run_cli(cli::Command::exponents, arrangement_path("generic4")).out, "does not split"));

  const auto csm = run_cli(cli::Command::csm, arrangement_path("braid"));
  CHECK(csm.code == 0);
  CHECK(contains(csm.out, "1 - 3*h + 2*h^2"));
  CHECK(contains(csm.out, "all equal: yes"));
  CHECK(contains(csm.out, "Euler characteristic: 2"));

  const auto diff_braid = run_cli(cli::Command::diff, arrangement_path("braid"));
  CHECK(diff_braid.code == 0);
  CHECK(contains(diff_braid.out, "is_zero=false"));
  CHECK(contains(run_cli(cli::Command::diff, arrangement_path("boolean3")).out, "is_zero=true"));

  const auto charpoly = run_cli(cli::Command::charpoly, arrangement_path("braid"));
  CHECK(charpoly.out == "t^3 - 6t^2 + 11t - 6\n");

  const auto mc_s = run_cli(cli::Command::mc, arrangement_path("braid"), cli::OutputFormat::text, std::nullopt,
                            KBasis::s);
  CHECK(contains(mc_s.out, "[6 - 16*s + 11*s^2]"));
}

TEST_CASE("JSON output round-trips to the in-memory values") {
  const auto lattice = build_lattice(read_arrangement_file(arrangement_path("braid")));
  const KPoly mc = mc_complement_lattice_sum(lattice);
  for (const auto basis : {KBasis::s, KBasis::one_minus_s}) {
    const auto result = run_cli(cli::Command::mc, arrangement_path("braid"), cli::OutputFormat::json, std::nullopt,
                                basis);
    const Json doc = Json::parse(result.out);
    CHECK(kpoly_from_json(doc.at("mc")) == mc);
    CHECK(kpoly_from_json(Json::parse(kpoly_to_json(mc, basis).dump())) == mc);
  }
  const auto csm = Json::parse(run_cli(cli::Command::csm, arrangement_path("braid"), cli::OutputFormat::json).out);
  CHECK(cohclass_from_json(csm.at("csm_mc")) == csm_at_minus_one(mc));

  const auto cleared = clear_denominator(normalize(grr_transform(mc)));
  const auto normalized = normalize(grr_transform(mc));
  CHECK(cohpoly_from_json(Json::parse(cohpoly_to_json(cleared).dump())) == cleared);
  CHECK(cohpoly_from_json(Json::parse(cohpoly_to_json(normalized).dump())) == normalized);

  const Integer big = Integer(1) << 80;
  CHECK(integer_to_json(big).is_string());
  CHECK(integer_from_json(integer_to_json(big)) == big);
  CHECK(integer_to_json(Integer(-5)).is_number_integer());
  CHECK(to_fraction_string(Rational(3)) == "3/1");
  CHECK(parse_fraction("-6/4") == Rational(-3) / 2);
  CHECK(parse_fraction("7") == 7);
  CHECK_THROWS_AS(parse_fraction("1/0"), ParseError);
  CHECK_THROWS_AS(parse_fraction("1/x"), ParseError);
}

TEST_CASE("singularity documents") {
  const auto parsed = parse_singularities(Json::parse(
      R"([{"mu": 12, "tau": 11, "r": 1, "label": "W12"}, {"poly": "x^2*y + y^4", "r": 2}])"));
  REQUIRE(parsed.size() == 2);
  CHECK(parsed[0].label == "W12");
  CHECK(parsed[0].singularity == CurveSingularity(12, 11, 1, 6));
  CHECK(parsed[1].label == "#1");
  CHECK(parsed[1].singularity == CurveSingularity(5, 5, 2, 3));
  CHECK_THROWS_AS(parse_singularities(Json::parse(R"({"mu": 1})")), ParseError);
  CHECK_THROWS_AS(parse_singularities(Json::parse(R"({"poly": 3})")), ParseError);
  CHECK_THROWS_AS(parse_singularities(Json::parse("3")), ParseError);
  CHECK_THROWS_AS(parse_singularities(Json::parse(R"({"poly": "x^2*y + y^4"})")), BranchCountRequiredError);
}

TEST_CASE("exit codes") {
  SUBCASE("in process") {
    CHECK(run_cli(cli::Command::mc, "/nonexistent.arr").code == cli::kExitInputError);
    const auto bad = run_cli(cli::Command::diff, arrangement_path("braid"), cli::OutputFormat::json, Exponents{1, 1, 1});
    CHECK(bad.code == cli::kExitInconsistent);
    CHECK(Json::parse(bad.out).at("routes_agree") == false);
    const auto invalid =
        run_cli(cli::Command::diff, arrangement_path("braid"), cli::OutputFormat::json, Exponents{1, 2});
    CHECK(invalid.code == cli::kExitInputError);
    CHECK(Json::parse(invalid.out).at("error").at("kind") == "validation");
    const auto route_only = run_cli(cli::Command::mc, arrangement_path("generic4"), cli::OutputFormat::text,
                                    std::nullopt, KBasis::one_minus_s, cli::McRoute::exponents);
    CHECK(route_only.code == cli::kExitInputError);
    CHECK(contains(route_only.err, "no exponent data"));
    const auto override_ok = run_cli(cli::Command::csm, arrangement_path("braid"), cli::OutputFormat::text,
                                     Exponents{3, 2, 1});
    CHECK(override_ok.code == cli::kExitOk);
  }
  SUBCASE("binary") {
    const std::string braid = arrangement_path("braid");
    CHECK(shell("--help") == 0);
    CHECK(shell("csm " + braid) == 0);
    CHECK(shell("csm " + braid + " --format json --route charpoly") == 0);
    CHECK(shell("frobnicate " + braid) == 1);
    CHECK(shell("csm") == 1);
    CHECK(shell("csm " + braid + " --format yaml") == 1);
    CHECK(shell("csm " + braid + " --exponents 1,x") == 1);
    CHECK(shell("diff " + braid + " --exponents 1,1,1") == 2);
    CHECK(shell("mc " + braid + " --basis s") == 0);
    CHECK(shell("mc " + braid, "LOGMC_MAX_LATTICE=4") == 1);
    CHECK(shell("mc " + braid, "LOGMC_MAX_LATTICE=lots") == 1);
    CHECK(shell("mc " + braid, "LOGMC_MAX_LATTICE=15") == 0);
  }
}

TEST_CASE("option parsing helpers") {
  CHECK(cli::parse_route("lattice") == cli::McRoute::lattice);
  CHECK(cli::to_string(cli::McRoute::charpoly) == "charpoly");
  CHECK_THROWS_AS(cli::parse_route("fast"), ParseError);
  CHECK_THROWS_AS(cli::parse_format("xml"), ParseError);
  CHECK_THROWS_AS(cli::parse_command("help"), ParseError);
}
