#include "logmc/cli.hpp"
#include "logmc/errors.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  using namespace logmc;
  CLI::App app{"Motivic Chern and log-Hodge classes of hyperplane arrangements and plane curves"};
  app.set_version_flag("--version", "logmc 0.1.0");

  std::string command;
  std::string input;
  std::string format = "text";
  std::string route = "all";
  std::string exponents;
  std::string basis = "one_minus_s";

  app.add_option("command", command,
                 "lattice | charpoly | exponents | mc | logclass | diff | csm | euler | curve")
      ->required();
  app.add_option("input", input, "arrangement file (.arr) or singularity JSON file for 'curve'")->required();
  app.add_option("--format", format, "output format: text or json")->capture_default_str();
  app.add_option("--route", route, "mC route: lattice, charpoly, exponents or all")->capture_default_str();
  app.add_option("--exponents", exponents, "override exponents, e.g. 1,2,3");
  app.add_option("--basis", basis, "K-theory basis for output: s or one_minus_s")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitInputError;
  }

  cli::RunConfig config;
  try {
    config.command = cli::parse_command(command);
    config.input_path = input;
    config.output_format = cli::parse_format(format);
    config.mc_route = cli::parse_route(route);
    if (!exponents.empty()) config.exponents_override = parse_exponents(exponents);
    config.basis = parse_kbasis(basis);
    config.max_lattice_nodes = cli::max_lattice_from_env();
  } catch (const ValidationError& e) {
    std::cerr << "logmc: " << e.what() << "\n";
    return cli::kExitInputError;
  }
  return cli::run(config, std::cout, std::cerr);
}
