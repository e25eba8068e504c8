#include "lisakit/error.hpp"

#include <utility>

namespace lisakit {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::TooFewUnits: return "TooFewUnits";
    case ErrorCode::NonZeroDiagonal: return "NonZeroDiagonal";
    case ErrorCode::NonPositiveOffDiagonal: return "NonPositiveOffDiagonal";
    case ErrorCode::Asymmetric: return "Asymmetric";
    case ErrorCode::EmptyRow: return "EmptyRow";
    case ErrorCode::InvalidKernel: return "InvalidKernel";
    case ErrorCode::ZeroVariance: return "ZeroVariance";
    case ErrorCode::ZeroRange: return "ZeroRange";
    case ErrorCode::ZeroSum: return "ZeroSum";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::LabelMismatch: return "LabelMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

ParseError::ParseError(std::string file, std::size_t line,
                       const std::string& what)
    : Error(ErrorCode::Parse,
            file + ":" + std::to_string(line) + ": " + what),
      file_(std::move(file)),
      line_(line) {}

}  // namespace lisakit
