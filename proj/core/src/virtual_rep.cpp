#include "gl2groth/virtual_rep.hpp"

#include "gl2groth/errors.hpp"

namespace gl2groth {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) {
    fail(ErrorCode::Overflow, "integer overflow in multiplicity arithmetic");
  }
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) {
    fail(ErrorCode::Overflow, "integer overflow in multiplicity arithmetic");
  }
  return r;
}

VirtualRep VirtualRep::basis(const BaseField& field, const Weight& w) {
  if (!is_valid_weight(field, w)) {
    fail(ErrorCode::OutOfRangeExponent, "weight is not a normalized basis label");
  }
  VirtualRep x(field);
  x.terms_[w] = 1;
  return x;
}

VirtualRep VirtualRep::unit(const BaseField& field) {
  Weight w;
  w.a = 0;
  w.n.assign(static_cast<size_t>(field.f), 0);
  return basis(field, w);
}

long long VirtualRep::coeff(const Weight& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

void VirtualRep::add_term(const Weight& w, long long c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

VirtualRep& VirtualRep::operator+=(const VirtualRep& o) {
  if (field_ != o.field_) fail(ErrorCode::FieldMismatch, "mixed base fields");
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

VirtualRep& VirtualRep::operator-=(const VirtualRep& o) {
  if (field_ != o.field_) fail(ErrorCode::FieldMismatch, "mixed base fields");
  for (const auto& [w, c] : o.terms_) add_term(w, checked_mul(c, -1));
  return *this;
}

VirtualRep VirtualRep::operator+(const VirtualRep& o) const {
  VirtualRep r = *this;
  r += o;
  return r;
}

VirtualRep VirtualRep::operator-(const VirtualRep& o) const {
  VirtualRep r = *this;
  r -= o;
  return r;
}

VirtualRep VirtualRep::operator-() const { return scaled(-1); }

VirtualRep VirtualRep::scaled(long long c) const {
  VirtualRep r(field_);
  if (c == 0) return r;
  for (const auto& [w, m] : terms_) r.terms_[w] = checked_mul(m, c);
  return r;
}

long long VirtualRep::dimension() const {
  long long d = 0;
  for (const auto& [w, c] : terms_) d = checked_add(d, checked_mul(c, weight_dimension(w)));
  return d;
}

bool leq(const VirtualRep& x, const VirtualRep& y) {
  if (x.field() != y.field()) fail(ErrorCode::FieldMismatch, "mixed base fields");
  auto ix = x.terms().begin(), ex = x.terms().end();
  auto iy = y.terms().begin(), ey = y.terms().end();
  while (ix != ex) {
    while (iy != ey && iy->first < ix->first) {
      if (iy->second < 0) return false;
      ++iy;
    }
    if (iy != ey && iy->first == ix->first) {
      if (iy->second < ix->second) return false;
      ++iy;
    } else if (ix->second > 0) {
      return false;
    }
    ++ix;
  }
  while (iy != ey) {
    if (iy->second < 0) return false;
    ++iy;
  }
  return true;
}

}  // namespace gl2groth
