#pragma once

#include <cstdint>
#include <map>

#include "gl2groth/base_field.hpp"
#include "gl2groth/weight.hpp"

namespace gl2groth {

// Element of G_0(\bar F_p[GL_2(F_q)]) in the irreducible basis: a finitely
// supported integer map Weight -> Z.  Canonical form: sorted keys, no zero
// multiplicities; equality is term-map equality.
class VirtualRep {
 public:
  explicit VirtualRep(BaseField field) : field_(std::move(field)) {}

  static VirtualRep zero(const BaseField& field) { return VirtualRep(field); }
  static VirtualRep basis(const BaseField& field, const Weight& w);
  static VirtualRep unit(const BaseField& field);  // class of the trivial rep

  const BaseField& field() const { return field_; }
  const std::map<Weight, long long>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  long long coeff(const Weight& w) const;

  // merges c into the coefficient of w; checked against int64 overflow
  void add_term(const Weight& w, long long c);

  VirtualRep& operator+=(const VirtualRep& o);
  VirtualRep& operator-=(const VirtualRep& o);
  VirtualRep operator+(const VirtualRep& o) const;
  VirtualRep operator-(const VirtualRep& o) const;
  VirtualRep operator-() const;
  VirtualRep scaled(long long c) const;

  bool operator==(const VirtualRep& o) const {
    return field_ == o.field_ && terms_ == o.terms_;
  }

  // ring homomorphism to Z: sum mult * prod(n_i + 1)
  long long dimension() const;

 private:
  BaseField field_;
  std::map<Weight, long long> terms_;
};

// true iff every coefficient of y - x is >= 0 (the natural partial order on
// G_0: y - x lies in the submonoid of actual representations)
bool leq(const VirtualRep& x, const VirtualRep& y);

// int64 helpers shared by the ring; throw Overflow on wraparound
long long checked_add(long long a, long long b);
long long checked_mul(long long a, long long b);

}  // namespace gl2groth
