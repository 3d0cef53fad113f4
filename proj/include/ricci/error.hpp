#pragma once

#include <stdexcept>
#include <string>

namespace ricci {

// Every failure the library can report.  One exception type carrying a code
// keeps call sites uniform and lets tests assert on the exact condition.
enum class ErrorCode {
  // complex construction / queries
  IndexOutOfRange,
  LoopEdge,
  DuplicateEdge,
  NonPositiveLength,
  FaceUsesMissingEdge,
  InvalidFace,
  NotAnEdge,
  Unreachable,
  IsolatedVertex,
  // measures and walks
  NegativeMass,
  ZeroNormalizer,
  InvalidMeasure,
  InvalidTime,
  // transport
  InfeasibleMarginals,
  ShapeMismatch,
  TooLarge,
  MarginalsOffLattice,
  NumericOverflow,  // pivot budget exhausted; indicates a solver bug
  // curvature
  SameVertex,
  NotInLinearRegime,
  DegreeTooSmall,
  UnsupportedDegreePair,
  FacesMissing,
  NotAGeodesic,
  AngleOutOfRange,
  // laplacians
  MissingWeight,
  NonPositiveWeight,
  InvalidLaplacian,
  // generators and io
  UnknownName,
  RadiusTooSmall,
  BadParameter,
  ParseError,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::NonPositiveLength: return "NonPositiveLength";
    case ErrorCode::FaceUsesMissingEdge: return "FaceUsesMissingEdge";
    case ErrorCode::InvalidFace: return "InvalidFace";
    case ErrorCode::NotAnEdge: return "NotAnEdge";
    case ErrorCode::Unreachable: return "Unreachable";
    case ErrorCode::IsolatedVertex: return "IsolatedVertex";
    case ErrorCode::NegativeMass: return "NegativeMass";
    case ErrorCode::ZeroNormalizer: return "ZeroNormalizer";
    case ErrorCode::InvalidMeasure: return "InvalidMeasure";
    case ErrorCode::InvalidTime: return "InvalidTime";
    case ErrorCode::InfeasibleMarginals: return "InfeasibleMarginals";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::MarginalsOffLattice: return "MarginalsOffLattice";
    case ErrorCode::NumericOverflow: return "NumericOverflow";
    case ErrorCode::SameVertex: return "SameVertex";
    case ErrorCode::NotInLinearRegime: return "NotInLinearRegime";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::UnsupportedDegreePair: return "UnsupportedDegreePair";
    case ErrorCode::FacesMissing: return "FacesMissing";
    case ErrorCode::NotAGeodesic: return "NotAGeodesic";
    case ErrorCode::AngleOutOfRange: return "AngleOutOfRange";
    case ErrorCode::MissingWeight: return "MissingWeight";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::InvalidLaplacian: return "InvalidLaplacian";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::RadiusTooSmall: return "RadiusTooSmall";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace ricci
