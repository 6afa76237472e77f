#include "gl2groth/weight.hpp"

#include <string>

#include "gl2groth/errors.hpp"

namespace gl2groth {

Weight normalize(const BaseField& field, long long a, const std::vector<long>& n) {
  if (static_cast<int>(n.size()) != field.f) {
    fail(ErrorCode::BadInput, "weight has " + std::to_string(n.size()) +
                                  " exponents, field has f = " + std::to_string(field.f));
  }
  Weight w;
  w.a = field.reduce_det(a);
  w.n.reserve(n.size());
  for (long ni : n) {
    if (ni < 0 || ni > field.p - 1) {
      fail(ErrorCode::OutOfRangeExponent,
           "exponent " + std::to_string(ni) + " outside [0, p-1] = [0, " +
               std::to_string(field.p - 1) + "]");
    }
    w.n.push_back(static_cast<int>(ni));
  }
  return w;
}

bool is_valid_weight(const BaseField& field, const Weight& w) {
  if (static_cast<int>(w.n.size()) != field.f) return false;
  if (w.a < 0 || w.a > field.qm1 - 1) return false;
  for (int ni : w.n) {
    if (ni < 0 || ni > field.p - 1) return false;
  }
  return true;
}

long long weight_dimension(const Weight& w) {
  long long d = 1;
  for (int ni : w.n) d *= ni + 1;
  return d;
}

long central_character_exponent(const BaseField& field, const Weight& w) {
  long long c = 2 * w.a;
  for (int i = 0; i < field.f; ++i) c += static_cast<long long>(w.n[i]) * field.ppow[i];
  return field.reduce_det(c);
}

std::optional<long> norm_power_form(const BaseField& field, const Weight& w, long e) {
  if (e < 1) fail(ErrorCode::PreconditionViolated, "e must be >= 1");
  long c = central_character_exponent(field, w);
  long trace = 0;  // 1 + p + ... + p^{f-1}
  for (long pp : field.ppow) trace += pp;
  for (long s = 1; s <= field.qm1; ++s) {
    if (field.reduce_det(static_cast<long long>(e) * s * trace) == c) return s;
  }
  return std::nullopt;
}

long weight_index(const BaseField& field, const Weight& w) {
  long nval = 0;
  for (int i = 0; i < field.f; ++i) nval += w.n[i] * field.ppow[i];
  return w.a * field.q + nval;
}

Weight weight_from_index(const BaseField& field, long idx) {
  Weight w;
  w.a = idx / field.q;
  long nval = idx % field.q;
  w.n.resize(static_cast<size_t>(field.f));
  for (int i = 0; i < field.f; ++i) {
    w.n[i] = static_cast<int>(nval % field.p);
    nval /= field.p;
  }
  return w;
}

std::vector<Weight> all_weights(const BaseField& field) {
  std::vector<Weight> out;
  out.reserve(static_cast<size_t>(field.qm1 * field.q));
  for (long a = 0; a < field.qm1; ++a) {
    for (long nval = 0; nval < field.q; ++nval) {
      out.push_back(weight_from_index(field, a * field.q + nval));
    }
  }
  return out;
}

}  // namespace gl2groth
