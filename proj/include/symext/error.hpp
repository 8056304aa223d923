#pragma once

#include <stdexcept>
#include <string>

namespace symext {

enum class ErrorKind {
  dimension_mismatch,
  invalid_argument,
  too_large,
  not_symmetric,
  not_positive_definite,
  not_a_subgroup,
  not_a_section,
  invalid_certificate,
  unbounded,
  infeasible,
  internal,
  parse,
};

const char* to_string(ErrorKind kind);

/// Structured error carried by every throwing operation in the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::dimension_mismatch: return "dimension mismatch";
    case ErrorKind::invalid_argument: return "invalid argument";
    case ErrorKind::too_large: return "too large";
    case ErrorKind::not_symmetric: return "not symmetric";
    case ErrorKind::not_positive_definite: return "not positive definite";
    case ErrorKind::not_a_subgroup: return "not a subgroup";
    case ErrorKind::not_a_section: return "not a section";
    case ErrorKind::invalid_certificate: return "invalid certificate";
    case ErrorKind::unbounded: return "unbounded";
    case ErrorKind::infeasible: return "infeasible";
    case ErrorKind::internal: return "internal consistency";
    case ErrorKind::parse: return "parse error";
  }
  return "error";
}

}  // namespace symext
