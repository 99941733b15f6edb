#pragma once

#include <json.hpp>

#include <optional>
#include <string>

// Subcommands behind the hopfgal tool. Every command builds one ordered JSON
// report; the text output is rendered from that report alone.
namespace hopfgal::cli {

using Report = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

enum ExitCode : int { kOk = 0, kMismatch = 1, kInputError = 2, kResource = 3 };

struct CommandOptions {
  std::string command;  // verify, integrals, galois, tame, homology, cyclic, bar-shift, assoc-order
  std::string path;
  std::optional<std::string> expect;      // tame | hopf-galois | neither
  std::optional<std::string> module;      // cyclic, bar-shift
  std::optional<std::string> candidates;  // assoc-order, "1,0;0,1;1,1"
  std::optional<std::string> order;       // associated | group-ring
  std::optional<std::size_t> levels;
};

struct CommandResult {
  Report report;
  int exit_code = kOk;
};

// Never throws; library errors become an "error" report with its exit code.
CommandResult run_command(const CommandOptions& opts);

std::string render_text(const Report& report);

}  // namespace hopfgal::cli
