#pragma once

#include <cstdint>
#include <vector>

namespace gl2groth {

// The finite field F_q, q = p^f, together with the embedding convention
// tau_i = tau_0 . Frob^i for i in Z/fZ.  Determinant exponents live mod q-1
// and are normalized into [0, q-2].
struct BaseField {
  long p = 0;
  int f = 0;
  long q = 0;
  long qm1 = 0;               // q - 1
  std::vector<long> ppow;     // p^i for i = 0..f-1 (plain integers, < q)

  // Validates: p prime, f >= 1, q = p^f small enough for exact arithmetic.
  static BaseField make(long p, int f);

  bool operator==(const BaseField& o) const { return p == o.p && f == o.f; }
  bool operator!=(const BaseField& o) const { return !(*this == o); }

  // i mod f as a nonnegative index
  int emb(long i) const {
    long r = i % f;
    return static_cast<int>(r < 0 ? r + f : r);
  }

  // p^(i mod f), i may be any integer
  long ppow_at(long i) const { return ppow[emb(i)]; }

  // reduce a determinant exponent into [0, q-2]
  long reduce_det(long long a) const {
    long long r = a % qm1;
    return static_cast<long>(r < 0 ? r + qm1 : r);
  }
};

}  // namespace gl2groth
