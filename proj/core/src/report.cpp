#include "jackbetti/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace jb {

bool VerificationReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void VerificationReport::add(std::string name, std::string required, std::string observed, bool ok) {
  checks.push_back({std::move(name), std::move(required), std::move(observed), ok});
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["claim"] = claim;
  nlohmann::ordered_json p = nlohmann::ordered_json::object();
  for (const auto& [k, v] : params) p[k] = v;
  j["params"] = p;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    j["checks"].push_back(
        {{"name", c.name}, {"required", c.required}, {"observed", c.observed}, {"pass", c.pass}});
  }
  nlohmann::ordered_json nt = nlohmann::ordered_json::object();
  for (const auto& [k, v] : notes) nt[k] = v;
  j["notes"] = nt;
  j["pass"] = pass();
  return j.dump(2);
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << claim;
  for (std::size_t i = 0; i < params.size(); ++i) {
    out << (i ? ", " : " (") << params[i].first << "=" << params[i].second;
  }
  if (!params.empty()) out << ")";
  out << "\n";
  for (const auto& c : checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name << ": required " << c.required << ", observed " << c.observed
        << "\n";
  }
  out << (pass() ? "PASS" : "FAIL") << " overall\n";
  return out.str();
}

}  // namespace jb
