#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ryser {

enum class ErrorKind {
  NotPrime,
  DegenerateDegree,
  SizeExceeded,
  ZeroInverse,
  InvalidPointIndex,
  EmptyHypergraph,
  InvalidVertex,
  ParseError,
  PartitenessViolation,
  DuplicateEdge,
  NonUniform,
  BadEdgeSize,
  TooLarge,
  SpecInvalid,
  ProfileInvalid,
  LineNotFound,
  MissingLabels,
  NotExtremal,
  ViolationsPresent,
  ConfigError,
  IoError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// All library failures surface as this exception; `kind()` tells callers
/// (and the CLI exit-code mapping) what went wrong.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::DegenerateDegree: return "DegenerateDegree";
    case ErrorKind::SizeExceeded: return "SizeExceeded";
    case ErrorKind::ZeroInverse: return "ZeroInverse";
    case ErrorKind::InvalidPointIndex: return "InvalidPointIndex";
    case ErrorKind::EmptyHypergraph: return "EmptyHypergraph";
    case ErrorKind::InvalidVertex: return "InvalidVertex";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::PartitenessViolation: return "PartitenessViolation";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::NonUniform: return "NonUniform";
    case ErrorKind::BadEdgeSize: return "BadEdgeSize";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::SpecInvalid: return "SpecInvalid";
    case ErrorKind::ProfileInvalid: return "ProfileInvalid";
    case ErrorKind::LineNotFound: return "LineNotFound";
    case ErrorKind::MissingLabels: return "MissingLabels";
    case ErrorKind::NotExtremal: return "NotExtremal";
    case ErrorKind::ViolationsPresent: return "ViolationsPresent";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace ryser
