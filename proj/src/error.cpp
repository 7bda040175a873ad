#include "polyapprox/error.hpp"

namespace polyapprox {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::DuplicateConsecutive: return "DuplicateConsecutive";
    case ErrorCode::InvalidDigit: return "InvalidDigit";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::DegenerateSegment: return "DegenerateSegment";
    case ErrorCode::InvalidCounts: return "InvalidCounts";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::ZeroError: return "ZeroError";
    case ErrorCode::InvalidGeometry: return "InvalidGeometry";
    case ErrorCode::ConstantSeries: return "ConstantSeries";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::AllZero: return "AllZero";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace polyapprox
