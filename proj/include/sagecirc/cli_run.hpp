#pragma once

#include "sagecirc/json_io.hpp"

#include <optional>
#include <string>

namespace sagecirc {

/// Command-line overrides; JSON fields supply everything else.
struct CliOverrides {
  std::optional<double> tol;
  std::optional<double> snap_radius;
  std::optional<std::size_t> beta;
  std::optional<std::size_t> circuit_index;
  std::optional<std::string> grid;  // "lo:hi:count", commas for extra dims
};

struct CliResult {
  int exit_code = 0;     // 0 decided, 2 inconclusive, 1 error
  std::string output;    // JSON document, newline-terminated
};

/// Runs one subcommand (circuits, reduced, age-check, sage-check, decompose,
/// refine, univariate, separate) against a problem document. Output is
/// deterministic: identical input bytes produce identical output bytes.
CliResult cli_run(const std::string& command, const std::string& json_text,
                  const CliOverrides& overrides = {});

}  // namespace sagecirc
