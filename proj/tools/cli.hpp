#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cliquelist/graph.hpp"

namespace cliquelist::cli {

enum ExitCode : int {
  kOk = 0,
  kValidationError = 1,
  kVerificationFailure = 2,
};

/// Parsed command line for one invocation.
struct RunConfig {
  std::string subcommand;
  /// Edge-list path, or "-" for standard input.
  std::optional<std::string> input_path;
  /// Generator family and its positional parameters.
  std::vector<std::string> family;
  std::uint64_t seed = 0;
  std::optional<std::string> output_path;
  bool include_empty = false;
  bool json = false;
  bool ordering_dump = false;
  bool list = false;
};

/// Builds a graph from a family name and its parameters, e.g.
/// {"ktree", "3", "10"}. Throws std::invalid_argument on unknown families or
/// malformed parameters.
Graph make_family_graph(const std::vector<std::string>& family, std::uint64_t seed);

/// Names and parameter lists of the supported families, one per line.
std::string family_usage();

/// Entry point. `args` excludes the program name. Returns an ExitCode.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace cliquelist::cli
