#include "symext/report.hpp"

#include <algorithm>

namespace symext {

bool Report::check(std::string name, bool pass, std::string details) {
  checks.push_back({std::move(name), pass, std::move(details)});
  return pass;
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

nlohmann::json to_json(const Report& r) {
  using nlohmann::json;
  json checks = json::array(), bounds = json::array();
  for (const auto& c : r.checks) checks.push_back(json{{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"details", c.details}});
  for (const auto& b : r.certified_bounds)
    bounds.push_back(json{{"quantity", b.quantity}, {"value", b.value}, {"provenance", b.provenance}});
  json out{{"scenario", r.scenario},
           {"inputs", r.inputs},
           {"checks", checks},
           {"certified_bounds", bounds},
           {"status", r.passed() ? "pass" : "fail"}};
  if (!r.artifact.is_null()) out["artifact"] = r.artifact;
  return out;
}

std::string emit(const Report& r, Format f) {
  if (f == Format::json) return to_json(r).dump(2) + "\n";
  std::string out = "scenario: " + r.scenario + "\n";
  if (!r.inputs.empty()) {
    out += "inputs:";
    for (const auto& [k, v] : r.inputs.items()) out += " " + k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
    out += "\n";
  }
  for (const auto& c : r.checks) {
    out += std::string(c.pass ? "[pass] " : "[FAIL] ") + c.name;
    if (!c.details.empty()) out += " -- " + c.details;
    out += "\n";
  }
  for (const auto& b : r.certified_bounds) out += "bound: " + b.quantity + " " + b.value + " (" + b.provenance + ")\n";
  if (!r.artifact.is_null()) out += "artifact: " + r.artifact.dump() + "\n";
  out += std::string("status: ") + (r.passed() ? "pass" : "fail") + "\n";
  return out;
}

}  // namespace symext
