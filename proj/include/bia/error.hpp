// Error codes raised across the workbench; the CLI maps them to exit codes.
#pragma once

#include <stdexcept>
#include <string>

namespace bia {

enum class Errc {
  Domain,
  PatternOutOfRange,
  ParseError,
  SchemaVersionMismatch,
  AsymmetricCells,
  BudgetExceeded,
  NotIntegerCase,
  UnknownName,
  UnsupportedConfig,
  Unbounded,
  Infeasible,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::Domain: return "DOMAIN";
    case Errc::PatternOutOfRange: return "PATTERN_OUT_OF_RANGE";
    case Errc::ParseError: return "PARSE_ERROR";
    case Errc::SchemaVersionMismatch: return "SCHEMA_VERSION_MISMATCH";
    case Errc::AsymmetricCells: return "ASYMMETRIC_CELLS";
    case Errc::BudgetExceeded: return "BUDGET_EXCEEDED";
    case Errc::NotIntegerCase: return "NOT_INTEGER_CASE";
    case Errc::UnknownName: return "UNKNOWN_NAME";
    case Errc::UnsupportedConfig: return "UNSUPPORTED_CONFIG";
    case Errc::Unbounded: return "UNBOUNDED";
    case Errc::Infeasible: return "INFEASIBLE";
  }
  return "UNKNOWN";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace bia
