#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace heegner {

enum class ErrorCode {
  NotHeegner,
  NonIntegralConstant,
  EvenModulus,
  BaseOutOfRange,
  OutOfOracleRange,
  LimitTooLarge,
  EmptyRange,
  NotPrime,
  DomainError,
  ValueTooSmall,
  FixedPrimeDivisor,
  InvalidRange,
  ExhaustedAttempts,
  NotStructured,
  ExponentNotCoprime,
  ParseError,
  MissingField,
  InvariantViolation,
  EvenUpperIndex,
  ChannelOutOfRange,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Domain error raised by every library operation. what() is prefixed with
/// the code name, e.g. "NonIntegralConstant: H = 1 ...".
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace heegner
