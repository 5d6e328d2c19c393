#include "gl2lab/error.hpp"

namespace gl2lab {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::InvalidModulus: return "InvalidModulus";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::MismatchedField: return "MismatchedField";
    case ErrorCode::MismatchedModulus: return "MismatchedModulus";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::InvalidDivisor: return "InvalidDivisor";
    case ErrorCode::ClosureOverflow: return "ClosureOverflow";
    case ErrorCode::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::NotInBorel: return "NotInBorel";
    case ErrorCode::WrongOrder: return "WrongOrder";
    case ErrorCode::UnknownCheck: return "UnknownCheck";
    case ErrorCode::RangeTooLarge: return "RangeTooLarge";
    case ErrorCode::CacheCorrupt: return "CacheCorrupt";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace gl2lab
