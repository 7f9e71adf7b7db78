// Command-line front end: argument handling, report rendering, exit codes.

#ifndef LATTICE_CLI_HPP
#define LATTICE_CLI_HPP

#include "lattice/exact.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace lattice::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kOracleDisagrees = 2,
};

/// Result of one subcommand.
struct CountReport {
  std::string shape;
  Int count;
  nlohmann::json trace{};  // null when absent
  std::optional<Int> oracle{};
  std::optional<bool> agreed{};

  /// Attaches an oracle value; agreed is derived from it.
  void attach_oracle(Int value);

  /// {"shape", "count", "trace"?, "oracle"?, "agreed"?}; integers as strings.
  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// Runs one command line (without the program name). Polygon input "-" is
/// read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace lattice::cli

#endif  // LATTICE_CLI_HPP
