#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mtp {

enum class ErrorCode {
  NonPositive,
  DuplicateSize,
  AreaMismatch,
  NonCanonicalizable,
  DegenerateGrid,
  KMismatch,
  NoK,
  NotTwoSize,
  NotThreeSize,
  TooFewSizes,
  UnsupportedClassCount,
  InvalidBounds,
  GridTooLarge,
  ZeroDenominator,
  ParseError,
};

[[nodiscard]] std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mtp
