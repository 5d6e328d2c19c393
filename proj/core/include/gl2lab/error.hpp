#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gl2lab {

enum class ErrorCode {
  NotAUnit,
  InvalidModulus,
  NotPrime,
  ZeroInverse,
  MismatchedField,
  MismatchedModulus,
  SingularMatrix,
  ZeroVector,
  InvalidDivisor,
  ClosureOverflow,
  UnsupportedFamily,
  NotASubgroup,
  NotInBorel,
  WrongOrder,
  UnknownCheck,
  RangeTooLarge,
  CacheCorrupt,
  IoError,
  ParseError,
  Internal,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so
// callers (tests, the CLI) can branch on the kind without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gl2lab
