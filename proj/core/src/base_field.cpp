#include "gl2groth/base_field.hpp"

#include <string>

#include "gl2groth/errors.hpp"

namespace gl2groth {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::OutOfRangeExponent: return "OutOfRangeExponent";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::AssertionFailed: return "AssertionFailed";
    case ErrorCode::DivisibilityFailed: return "DivisibilityFailed";
    case ErrorCode::NoNormPowerForm: return "NoNormPowerForm";
    case ErrorCode::CentralCharacterMismatch: return "CentralCharacterMismatch";
    case ErrorCode::SizeBound: return "SizeBound";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "Unknown";
}

namespace {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// keeps q^2 - 1 and all dense index arithmetic inside long
constexpr long kMaxQ = 1L << 15;

}  // namespace

BaseField BaseField::make(long p, int f) {
  if (!is_prime(p)) {
    fail(ErrorCode::InvalidField, "p = " + std::to_string(p) + " is not prime");
  }
  if (f < 1) {
    fail(ErrorCode::InvalidField, "f must be >= 1, got " + std::to_string(f));
  }
  long q = 1;
  std::vector<long> ppow;
  ppow.reserve(static_cast<size_t>(f));
  for (int i = 0; i < f; ++i) {
    ppow.push_back(q);
    if (q > kMaxQ / p) {
      fail(ErrorCode::SizeBound,
           "q = " + std::to_string(p) + "^" + std::to_string(f) +
               " exceeds the exact-arithmetic bound");
    }
    q *= p;
  }
  BaseField field;
  field.p = p;
  field.f = f;
  field.q = q;
  field.qm1 = q - 1;
  field.ppow = std::move(ppow);
  return field;
}

}  // namespace gl2groth
