#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kout {

enum class ErrorCode {
  BadVertex,
  OddOrder,
  InfeasibleDegree,
  ParseError,
  DuplicateEdge,
  SelfLoop,
  DegreeTooSmall,
  BadMultiplicity,
  BudgetExhausted,
  RetriesExhausted,
  TooLargeForExhaustive,
  TooLarge,
  BadPivot,
  BadId,
  MissingLineage,
  ConfigError,
  IoError,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::BadVertex: return "BadVertex";
    case ErrorCode::OddOrder: return "OddOrder";
    case ErrorCode::InfeasibleDegree: return "InfeasibleDegree";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::BadMultiplicity: return "BadMultiplicity";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
    case ErrorCode::RetriesExhausted: return "RetriesExhausted";
    case ErrorCode::TooLargeForExhaustive: return "TooLargeForExhaustive";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BadPivot: return "BadPivot";
    case ErrorCode::BadId: return "BadId";
    case ErrorCode::MissingLineage: return "MissingLineage";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

/// Base of every exception thrown by the library. `code()` identifies the
/// failure class; `detail()` carries the one integer payload some errors
/// have (offending vertex, line number, failure count).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, std::size_t detail = 0)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  std::size_t detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::size_t detail_;
};

}  // namespace kout
