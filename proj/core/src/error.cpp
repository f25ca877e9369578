#include "mtp/error.hpp"

namespace mtp {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonPositive: return "NonPositive";
    case ErrorCode::DuplicateSize: return "DuplicateSize";
    case ErrorCode::AreaMismatch: return "AreaMismatch";
    case ErrorCode::NonCanonicalizable: return "NonCanonicalizable";
    case ErrorCode::DegenerateGrid: return "DegenerateGrid";
    case ErrorCode::KMismatch: return "KMismatch";
    case ErrorCode::NoK: return "NoK";
    case ErrorCode::NotTwoSize: return "NotTwoSize";
    case ErrorCode::NotThreeSize: return "NotThreeSize";
    case ErrorCode::TooFewSizes: return "TooFewSizes";
    case ErrorCode::UnsupportedClassCount: return "UnsupportedClassCount";
    case ErrorCode::InvalidBounds: return "InvalidBounds";
    case ErrorCode::GridTooLarge: return "GridTooLarge";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace mtp
