#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "gl2groth/base_field.hpp"
#include "gl2groth/virtual_rep.hpp"
#include "gl2groth/weight.hpp"

namespace gl2groth {

// det^w (x) prod_i Sym^{m_i}_{[i]} before straightening; exponents m_i may be
// any integers (Sym^{-1} = 0, and for k < -1 the class is
// -[det^{p^i(k+1)} (x) Sym^{-k-2}_{[i]}]).
struct SymProduct {
  long long det_exp = 0;
  std::vector<long> m;

  bool operator==(const SymProduct&) const = default;
};

// Ring operations on G_0 in the irreducible basis.  All values are immutable
// and operations are pure; the memo tables are guarded by a mutex so one
// instance can be shared across threads.
class GrothendieckRing {
 public:
  explicit GrothendieckRing(BaseField field);

  const BaseField& field() const { return field_; }

  // Class of Sym^k_{[i]} for any integer k, expanded in the basis.  The
  // straightening recursion is
  //   [Sym^{m+p}_{[i]}] = [Sym^m_{[i]} (x) Sym^1_{[i+1]}]
  //                       - [det^{p^{i+1}} (x) Sym^{m-p}_{[i]}],
  // the [i]=0 case transported to embedding i by Frobenius twist.
  VirtualRep sym_class(long i, long k) const;

  VirtualRep straighten(const SymProduct& sp) const;

  // product in G_0, bilinear over the per-embedding Clebsch-Gordan expansion
  // [Sym^n (x) Sym^m]_{[i]} = sum_j [det^{j p^i} (x) Sym^{n+m-2j}_{[i]}]
  VirtualRep tensor(const VirtualRep& x, const VirtualRep& y) const;

  VirtualRep power(const VirtualRep& x, long e) const;

  VirtualRep det_twist(const VirtualRep& x, long long w) const;

  // [S_{(t,...,t)}^{(x) e}], memoized; the workhorse of brute-force sweeps
  VirtualRep parallel_power(long t, long e) const;

 private:
  struct GenTerm {
    long a;               // det exponent, reduced mod q-1
    std::vector<long> m;  // arbitrary integers
    auto operator<=>(const GenTerm&) const = default;
  };

  VirtualRep straighten_general(std::map<GenTerm, long long> pending) const;
  VirtualRep basis_product(const Weight& w1, const Weight& w2) const;
  VirtualRep sym_class_uncached(int i, long k) const;

  BaseField field_;
  bool dense_ok_;  // dense accumulation path usable for this field size

  mutable std::mutex mu_;
  mutable std::map<std::pair<int, long>, VirtualRep> sym_cache_;
  mutable std::unordered_map<std::uint64_t, VirtualRep> pair_cache_;
  mutable std::map<std::pair<long, long>, VirtualRep> parallel_cache_;
};

}  // namespace gl2groth
