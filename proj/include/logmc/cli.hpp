#pragma once

#include "logmc/arrangement.hpp"
#include "logmc/kring.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace logmc::cli {

enum class Command { lattice, charpoly, exponents, mc, logclass, diff, csm, euler, curve };
enum class OutputFormat { text, json };
enum class McRoute { lattice, charpoly, exponents, all };

Command parse_command(const std::string& text);
OutputFormat parse_format(const std::string& text);
McRoute parse_route(const std::string& text);
std::string to_string(McRoute route);

struct RunConfig {
  Command command = Command::mc;
  std::filesystem::path input_path;
  OutputFormat output_format = OutputFormat::text;
  McRoute mc_route = McRoute::all;
  std::optional<Exponents> exponents_override;
  KBasis basis = KBasis::one_minus_s;
  std::size_t max_lattice_nodes = kDefaultMaxLatticeNodes;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitInconsistent = 2;

/// Executes one command. The report goes to `out`; in text mode errors go to
/// `err`, in JSON mode they are emitted on `out` as {"error": {...}}.
/// Returns 0, 1 (parse/validation) or 2 (exact identity failed).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Node cap from LOGMC_MAX_LATTICE, falling back to the default.
std::size_t max_lattice_from_env();

}  // namespace logmc::cli
