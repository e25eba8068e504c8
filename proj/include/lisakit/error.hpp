#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lisakit {

enum class ErrorCode {
  TooFewUnits,
  NonZeroDiagonal,
  NonPositiveOffDiagonal,
  Asymmetric,
  EmptyRow,
  InvalidKernel,
  ZeroVariance,
  ZeroRange,
  ZeroSum,
  DimensionMismatch,
  LabelMismatch,
  InvalidArgument,
  Parse,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Base exception for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Malformed input file. Carries the file name and 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::string file, std::size_t line, const std::string& what);

  const std::string& file() const noexcept { return file_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string file_;
  std::size_t line_;
};

}  // namespace lisakit
