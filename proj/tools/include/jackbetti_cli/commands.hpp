#pragma once

#include <string>
#include <vector>

#include "jackbetti/report.hpp"
#include "jackbetti_cli/serialize.hpp"

namespace jb::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitNotWellDefined = 3;

struct CommandResult {
  std::string command;
  json params = json::object();
  json result = json::object();
  std::vector<Check> checks;
  int exit_code = kExitPass;
  bool json_output = false;
  // Human-readable rendering printed when --json is absent.
  std::string text;

  // {"command", "params", "result", "checks", "version"}
  json to_json() const;
  // The bytes written to stdout.
  std::string output() const;
};

// argv without the program name.
CommandResult run(const std::vector<std::string>& args);

const char* version();

}  // namespace jb::cli
