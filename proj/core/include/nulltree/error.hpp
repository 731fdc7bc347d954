#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nulltree {

enum class ErrorCode {
  // Domain errors: bad input or violated preconditions.
  kParseError,
  kNotATree,
  kVertexNotFound,
  kDomainMismatch,
  kNotDisjoint,
  kEmptyBasis,
  kTooLarge,
  kNotCoreVertex,
  kBadArity,
  kKTooSmall,
  kNotSupported,
  kNotSTree,
  kNotInternalSupport,
  kNotAtom,
  kTooSmall,
  kBadCode,
  // Verification failures: an exact check disagreed with a construction.
  kValidationFailed,
  kSpanMismatch,
  kFormulaMismatch,
};

std::string_view to_string(ErrorCode code);

constexpr bool is_verification_failure(ErrorCode code) {
  return code == ErrorCode::kValidationFailed ||
         code == ErrorCode::kSpanMismatch ||
         code == ErrorCode::kFormulaMismatch;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nulltree
