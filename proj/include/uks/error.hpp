#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace uks {

enum class ErrorKind {
  NotHermitian,
  NoConvergence,
  InvalidDomain,
  NotARotation,
  OutOfRange,
  InvalidParams,
  OutOfDomain,
  DomainError,
  NotNormalized,
  NotAState,
  NoNegativeEigenvalue,
  InvalidRange,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::InvalidDomain: return "InvalidDomain";
    case ErrorKind::NotARotation: return "NotARotation";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::NotAState: return "NotAState";
    case ErrorKind::NoNegativeEigenvalue: return "NoNegativeEigenvalue";
    case ErrorKind::InvalidRange: return "InvalidRange";
  }
  return "Unknown";
}

/// Single exception type for the library; `kind()` tells callers which
/// precondition failed.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace uks
