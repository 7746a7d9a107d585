#pragma once

#include <stdexcept>
#include <string>

namespace rfg {

enum class Errc {
  SumMismatch,
  NegativeDegree,
  InfeasibleParams,
  OracleLimitExceeded,
  BudgetExceeded,
  NotEnoughDegreeOneVertices,
  RegimeNotApplicable,
  DegenerateBins,
  DomainError,
  ConfigError,
  IoError,
};

/// Library-wide exception carrying a stable error code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::SumMismatch: return "SumMismatch";
    case Errc::NegativeDegree: return "NegativeDegree";
    case Errc::InfeasibleParams: return "InfeasibleParams";
    case Errc::OracleLimitExceeded: return "OracleLimitExceeded";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::NotEnoughDegreeOneVertices: return "NotEnoughDegreeOneVertices";
    case Errc::RegimeNotApplicable: return "RegimeNotApplicable";
    case Errc::DegenerateBins: return "DegenerateBins";
    case Errc::DomainError: return "DomainError";
    case Errc::ConfigError: return "ConfigError";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace rfg
