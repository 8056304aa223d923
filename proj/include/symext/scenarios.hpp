#pragma once

// Named reproduction pipelines and the CLI verbs, each producing a Report.

#include <string>
#include <vector>

#include "symext/io.hpp"
#include "symext/report.hpp"

namespace symext {

struct ScenarioInfo {
  std::string name;
  std::vector<std::string> params;  // with defaults, e.g. "n=4"
  std::string summary;
  std::vector<std::string> provenance;  // of its certified bounds
};

const std::vector<ScenarioInfo>& scenario_registry();

/// params is a JSON object of integer or string values; unknown parameters
/// and unknown names throw invalid_argument.
Report run_scenario(const std::string& name, const nlohmann::json& params = nlohmann::json::object());

// Verbs behind `symext <noun> <verb>`.
Report zoo_build_report(ZooId id, int n, int l);
Report polytope_report(const std::string& verb, const nlohmann::json& polytope);  // certify | facets | vertices
Report extension_verify_report(const nlohmann::json& spec);
Report extension_project_check_report(const nlohmann::json& spec);
Report theorem1_report(const nlohmann::json& cert);
Report sdp_report(const nlohmann::json& cert);
Report superlinear_check_report(const nlohmann::json& cert);

}  // namespace symext
