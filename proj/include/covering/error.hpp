#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace covering {

enum class ErrorKind {
  InvalidArgument,
  DimensionMismatch,
  MalformedInput,
  UnboundedSupport,
  EmptyInterior,
  Unbounded,
  EmptyIntersection,
  NoConvergence,
  UnsupportedBody,
  CertificateFailure,
  InfeasibleSum,
  ProductTooLarge,
  WitnessInvalid,
  InvalidInstance,
  DegenerateCell,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::UnboundedSupport: return "UnboundedSupport";
    case ErrorKind::EmptyInterior: return "EmptyInterior";
    case ErrorKind::Unbounded: return "Unbounded";
    case ErrorKind::EmptyIntersection: return "EmptyIntersection";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::UnsupportedBody: return "UnsupportedBody";
    case ErrorKind::CertificateFailure: return "CertificateFailure";
    case ErrorKind::InfeasibleSum: return "InfeasibleSum";
    case ErrorKind::ProductTooLarge: return "ProductTooLarge";
    case ErrorKind::WitnessInvalid: return "WitnessInvalid";
    case ErrorKind::InvalidInstance: return "InvalidInstance";
    case ErrorKind::DegenerateCell: return "DegenerateCell";
  }
  return "Unknown";
}

}  // namespace covering
