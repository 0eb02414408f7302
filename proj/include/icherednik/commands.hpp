#pragma once

// The command layer behind the command-line tool. Each command returns a JSON
// report, a text rendering and an exit status.

#include <optional>
#include <string>
#include <vector>

#include "icherednik/json_io.hpp"

namespace icherednik {

struct RunConfig {
  int n = 1;
  std::uint32_t characteristic = 0;
  std::vector<std::string> b{"1"};
  std::optional<std::string> ctable_path;  ///< hand-written table instead of b
  int maxdeg = 4;
  int center_bound = 0;  ///< 0: start at i + m
  int verma_depth = 8;
  std::vector<std::vector<std::string>> weights;
  std::vector<std::string> c{"1"};  ///< c(h) for the charp command
  std::string format = "json";
  std::optional<std::string> out;

  /// Throws std::invalid_argument on nonpositive bounds, empty b, bad format.
  void validate() const;
};

/// Overlays the keys present in `j` onto `base`. Keys mirror the long flags,
/// with '-' replaced by '_'; "weights" may be an inline list or a file path.
RunConfig config_from_json(const json& j, RunConfig base = {});
/// Reads a list of weights from either [[...], ...] or {"weights": [[...], ...]}.
std::vector<std::vector<std::string>> weights_from_json(const json& j);

struct CommandResult {
  json report;
  std::string text;
  int exit_code = 0;
};

/// The algebra described by a config (ctable file if given, else b).
AlgebraSpec spec_from_config(const RunConfig& cfg);
std::vector<Weight> weights_from_config(const RunConfig& cfg, const HcAlgebra& alg);

CommandResult cmd_relations(const RunConfig& cfg);
CommandResult cmd_verify(const RunConfig& cfg);
CommandResult cmd_center(const RunConfig& cfg);
CommandResult cmd_blocks(const RunConfig& cfg);
CommandResult cmd_charp(const RunConfig& cfg);

/// Dispatches on "relations" | "verify" | "center" | "blocks" | "charp".
CommandResult run_command(const std::string& command, const RunConfig& cfg);

}  // namespace icherednik
