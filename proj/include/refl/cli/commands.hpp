#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace refl::cli {

inline constexpr const char* kVersion = "1.0.0";

enum ExitStatus : int { kExitOk = 0, kExitUsage = 2, kExitBudget = 3, kExitInvariant = 4 };

struct CommandResult {
  std::string command;
  nlohmann::json payload;
  std::string text;
  int exit_status = kExitOk;
  std::string error;
  bool json = false;

  /// {"command", "version", "result"}.
  nlohmann::json envelope() const;
  /// Standard output for this result: the text form, or the envelope when
  /// --json was given.
  std::string output() const;
};

/// Runs one invocation; args excludes the program name. The element
/// budget defaults to REFL_BUDGET when that variable is set.
CommandResult run(const std::vector<std::string>& args);

}  // namespace refl::cli
