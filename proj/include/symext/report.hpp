#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace symext {

struct Check {
  std::string name;
  bool pass = false;
  std::string details;
};

struct CertifiedBound {
  std::string quantity;
  std::string value;
  std::string provenance;
};

struct Report {
  std::string scenario;
  nlohmann::json inputs = nlohmann::json::object();
  std::vector<Check> checks;
  std::vector<CertifiedBound> certified_bounds;
  nlohmann::json artifact;  // emitted when not null (built polytopes, vertex lists)

  /// Appends a check and returns `pass`.
  bool check(std::string name, bool pass, std::string details = {});
  bool passed() const;
};

enum class Format { json, text };

/// Canonical bytes: sorted keys, two-space indent, trailing newline.
std::string emit(const Report& r, Format f);
nlohmann::json to_json(const Report& r);

}  // namespace symext
