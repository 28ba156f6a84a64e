#pragma once

#include <string>
#include <utility>
#include <vector>

namespace jb {

struct Check {
  std::string name;
  std::string required;
  std::string observed;
  bool pass = false;
};

struct VerificationReport {
  std::string claim;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<Check> checks;
  // Free-form key/value notes such as sample points; serialized but not checked.
  std::vector<std::pair<std::string, std::string>> notes;

  bool pass() const;
  void add(std::string name, std::string required, std::string observed, bool ok);
  // Stable JSON layout: {"claim", "params", "checks", "notes", "pass"}.
  std::string to_json() const;
  // One PASS/FAIL line per check followed by an overall line.
  std::string to_text() const;
};

}  // namespace jb
