#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pathlab {

enum class ErrorKind {
  ParseError,
  NotAPath,
  ColumnOrderViolation,
  DecorationNotContractible,
  NonStandardLabeling,
  LadderViolation,
  ShapeViolation,
  NotAnADR,
  DomainViolation,
  ScheduleNotOne,
};

constexpr std::string_view to_string(ErrorKind k) noexcept {
  switch (k) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotAPath: return "NotAPath";
    case ErrorKind::ColumnOrderViolation: return "ColumnOrderViolation";
    case ErrorKind::DecorationNotContractible: return "DecorationNotContractible";
    case ErrorKind::NonStandardLabeling: return "NonStandardLabeling";
    case ErrorKind::LadderViolation: return "LadderViolation";
    case ErrorKind::ShapeViolation: return "ShapeViolation";
    case ErrorKind::NotAnADR: return "NotAnADR";
    case ErrorKind::DomainViolation: return "DomainViolation";
    case ErrorKind::ScheduleNotOne: return "ScheduleNotOne";
  }
  return "Unknown";
}

/// Every precondition failure in the library is reported as an Error whose
/// kind names the violated contract.
class Error : public std::invalid_argument {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::invalid_argument(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pathlab
