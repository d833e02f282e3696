#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sparseprime {

enum class ErrorKind {
  ParseError,
  DimensionMismatch,
  EmptySupport,
  NotInLattice,
  ZeroVector,
  NotFullDimensional,
  RankMismatch,
  TooLarge,
  BudgetExceeded,
  CommonFactor,
  PreconditionFailed,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above so
// that front ends can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::EmptySupport: return "EmptySupport";
    case ErrorKind::NotInLattice: return "NotInLattice";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::NotFullDimensional: return "NotFullDimensional";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::CommonFactor: return "CommonFactor";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
  }
  return "Unknown";
}

}  // namespace sparseprime
