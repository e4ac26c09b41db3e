#include "heegner/error.hpp"

namespace heegner {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotHeegner: return "NotHeegner";
    case ErrorCode::NonIntegralConstant: return "NonIntegralConstant";
    case ErrorCode::EvenModulus: return "EvenModulus";
    case ErrorCode::BaseOutOfRange: return "BaseOutOfRange";
    case ErrorCode::OutOfOracleRange: return "OutOfOracleRange";
    case ErrorCode::LimitTooLarge: return "LimitTooLarge";
    case ErrorCode::EmptyRange: return "EmptyRange";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::ValueTooSmall: return "ValueTooSmall";
    case ErrorCode::FixedPrimeDivisor: return "FixedPrimeDivisor";
    case ErrorCode::InvalidRange: return "InvalidRange";
    case ErrorCode::ExhaustedAttempts: return "ExhaustedAttempts";
    case ErrorCode::NotStructured: return "NotStructured";
    case ErrorCode::ExponentNotCoprime: return "ExponentNotCoprime";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::MissingField: return "MissingField";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::EvenUpperIndex: return "EvenUpperIndex";
    case ErrorCode::ChannelOutOfRange: return "ChannelOutOfRange";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace heegner
