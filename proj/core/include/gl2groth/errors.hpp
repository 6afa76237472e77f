#pragma once

#include <stdexcept>
#include <string>

namespace gl2groth {

// Error codes surfaced by the CLI as machine-readable objects.
enum class ErrorCode {
  InvalidField,
  OutOfRangeExponent,
  FieldMismatch,
  PreconditionViolated,
  AssertionFailed,
  DivisibilityFailed,
  NoNormPowerForm,
  CentralCharacterMismatch,
  SizeBound,
  Overflow,
  BadInput,
};

const char* to_string(ErrorCode code);

class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorCode code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw DomainError(code, msg);
}

}  // namespace gl2groth
