#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dirichlet_lab {

enum class ErrorKind {
  DomainViolation,
  PrecisionExhausted,
  EmptyWord,
  InvalidPair,
  InvalidArgument,
  ParseError,
  BudgetExceeded,
  NotApplicable,
  Terminated,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DomainViolation: return "DomainViolation";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::EmptyWord: return "EmptyWord";
    case ErrorKind::InvalidPair: return "InvalidPair";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::Terminated: return "Terminated";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool condition, ErrorKind kind, const std::string& what) {
  if (!condition) fail(kind, what);
}

}  // namespace dirichlet_lab
