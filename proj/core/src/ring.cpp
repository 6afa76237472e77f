#include "gl2groth/ring.hpp"

#include <algorithm>
#include <string>

#include "gl2groth/errors.hpp"

namespace gl2groth {

namespace {
constexpr long kDenseLimit = 1L << 22;
}

GrothendieckRing::GrothendieckRing(BaseField field) : field_(std::move(field)) {
  dense_ok_ = field_.qm1 * field_.q <= kDenseLimit;
}

// Straightens a combination of det^a (x) prod Sym^{m_i}_{[i]} with arbitrary
// integer exponents into the irreducible basis.  Rules, applied to the first
// out-of-range slot i:
//   m_i = -1            : drop the term
//   m_i < -1            : negate, a += p^i (m_i + 1), m_i := -m_i - 2
//   m_i >= p            : Sym^{m_i} = Sym^{m_i-p} (x) Sym^1_{[i+1]}
//                                     - det^{p^{i+1}} Sym^{m_i-2p}
//     combined with Sym^1_{[i+1]} (x) Sym^{m_{i+1}} = Sym^{m_{i+1}+1}
//                                     + det^{p^{i+1}} Sym^{m_{i+1}-1}.
// Each rule strictly decreases sum_i w(m_i), w(m) = m for m >= 0 and
// -m-1 otherwise, so the worklist terminates.
VirtualRep GrothendieckRing::straighten_general(std::map<GenTerm, long long> pending) const {
  const long p = field_.p;
  const int f = field_.f;
  VirtualRep out(field_);

  auto push = [&](GenTerm key, long long c) {
    if (c == 0) return;
    key.a = field_.reduce_det(key.a);
    auto [it, inserted] = pending.try_emplace(std::move(key), c);
    if (!inserted) {
      it->second = checked_add(it->second, c);
      if (it->second == 0) pending.erase(it);
    }
  };

  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const GenTerm& term = node.key();
    const long long c = node.mapped();
    if (c == 0) continue;

    int bad = -1;
    for (int i = 0; i < f; ++i) {
      if (term.m[i] < 0 || term.m[i] > p - 1) {
        bad = i;
        break;
      }
    }
    if (bad < 0) {
      Weight w;
      w.a = field_.reduce_det(term.a);
      w.n.assign(term.m.begin(), term.m.end());
      out.add_term(w, c);
      continue;
    }

    const long mi = term.m[bad];
    if (mi == -1) continue;
    if (mi < -1) {
      GenTerm next = term;
      next.a += field_.ppow[bad] * (mi + 1);
      next.m[bad] = -mi - 2;
      push(std::move(next), checked_mul(c, -1));
      continue;
    }

    // mi >= p
    const int j = field_.emb(bad + 1);
    const long pj = field_.ppow[j];  // p^{i+1} mod q-1 via index wrap
    GenTerm t1 = term;
    t1.m[bad] -= p;
    t1.m[j] += 1;
    push(std::move(t1), c);

    GenTerm t2 = term;
    t2.m[bad] -= p;
    t2.m[j] -= 1;
    t2.a += pj;
    push(std::move(t2), c);

    GenTerm t3 = term;
    t3.m[bad] -= 2 * p;
    t3.a += pj;
    push(std::move(t3), checked_mul(c, -1));
  }
  return out;
}

VirtualRep GrothendieckRing::sym_class_uncached(int i, long k) const {
  const long p = field_.p;
  if (k == -1) return VirtualRep::zero(field_);
  if (k >= 0 && k <= p - 1) {
    Weight w;
    w.a = 0;
    w.n.assign(static_cast<size_t>(field_.f), 0);
    w.n[i] = static_cast<int>(k);
    return VirtualRep::basis(field_, w);
  }
  if (k < -1) {
    // [Sym^k_{[i]}] = -[det^{p^i(k+1)} (x) Sym^{-k-2}_{[i]}]
    return det_twist(sym_class(i, -k - 2), field_.ppow[i] * (k + 1)).scaled(-1);
  }
  // k >= p
  VirtualRep a = tensor(sym_class(i, k - p), sym_class(i + 1, 1));
  VirtualRep b = det_twist(sym_class(i, k - 2 * p), field_.ppow_at(i + 1));
  return a - b;
}

VirtualRep GrothendieckRing::sym_class(long i_raw, long k) const {
  const int i = field_.emb(i_raw);
  const auto key = std::make_pair(i, k);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = sym_cache_.find(key);
    if (it != sym_cache_.end()) return it->second;
  }
  VirtualRep r = sym_class_uncached(i, k);
  std::lock_guard<std::mutex> lock(mu_);
  return sym_cache_.emplace(key, std::move(r)).first->second;
}

VirtualRep GrothendieckRing::det_twist(const VirtualRep& x, long long w) const {
  VirtualRep out(field_);
  for (const auto& [wt, c] : x.terms()) {
    Weight shifted = wt;
    shifted.a = field_.reduce_det(wt.a + w);
    out.add_term(shifted, c);
  }
  return out;
}

VirtualRep GrothendieckRing::straighten(const SymProduct& sp) const {
  if (static_cast<int>(sp.m.size()) != field_.f) {
    fail(ErrorCode::BadInput, "product has " + std::to_string(sp.m.size()) +
                                  " factors, field has f = " + std::to_string(field_.f));
  }
  VirtualRep out = sym_class(0, sp.m[0]);
  for (int i = 1; i < field_.f; ++i) out = tensor(out, sym_class(i, sp.m[i]));
  return det_twist(out, sp.det_exp);
}

VirtualRep GrothendieckRing::basis_product(const Weight& w1, const Weight& w2) const {
  const std::uint64_t key =
      (static_cast<std::uint64_t>(weight_index(field_, w1)) << 31) |
      static_cast<std::uint64_t>(weight_index(field_, w2));
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = pair_cache_.find(key);
    if (it != pair_cache_.end()) return it->second;
  }

  // Clebsch-Gordan at each embedding, then straighten the leftovers.
  const int f = field_.f;
  std::map<GenTerm, long long> terms;
  std::vector<long> j(static_cast<size_t>(f), 0);
  while (true) {
    GenTerm t;
    long long a = w1.a + w2.a;
    t.m.resize(static_cast<size_t>(f));
    for (int i = 0; i < f; ++i) {
      a += j[i] * field_.ppow[i];
      t.m[i] = w1.n[i] + w2.n[i] - 2 * j[i];
    }
    t.a = field_.reduce_det(a);
    auto [it, inserted] = terms.try_emplace(std::move(t), 1);
    if (!inserted) it->second += 1;

    int carry = 0;
    while (carry < f) {
      if (j[carry] < std::min(w1.n[carry], w2.n[carry])) {
        ++j[carry];
        break;
      }
      j[carry] = 0;
      ++carry;
    }
    if (carry == f) break;
  }
  VirtualRep r = straighten_general(std::move(terms));

  std::lock_guard<std::mutex> lock(mu_);
  return pair_cache_.emplace(key, std::move(r)).first->second;
}

VirtualRep GrothendieckRing::tensor(const VirtualRep& x, const VirtualRep& y) const {
  if (x.field() != field_ || y.field() != field_) {
    fail(ErrorCode::FieldMismatch, "tensor operands over a different base field");
  }
  if (dense_ok_) {
    std::vector<long long> acc(static_cast<size_t>(field_.qm1 * field_.q), 0);
    for (const auto& [w1, c1] : x.terms()) {
      for (const auto& [w2, c2] : y.terms()) {
        const long long c = checked_mul(c1, c2);
        const VirtualRep& prod = basis_product(w1, w2);
        for (const auto& [w, m] : prod.terms()) {
          auto& slot = acc[static_cast<size_t>(weight_index(field_, w))];
          slot = checked_add(slot, checked_mul(c, m));
        }
      }
    }
    VirtualRep out(field_);
    for (size_t idx = 0; idx < acc.size(); ++idx) {
      if (acc[idx] != 0) out.add_term(weight_from_index(field_, static_cast<long>(idx)), acc[idx]);
    }
    return out;
  }
  VirtualRep out(field_);
  for (const auto& [w1, c1] : x.terms()) {
    for (const auto& [w2, c2] : y.terms()) {
      const long long c = checked_mul(c1, c2);
      const VirtualRep& prod = basis_product(w1, w2);
      for (const auto& [w, m] : prod.terms()) out.add_term(w, checked_mul(c, m));
    }
  }
  return out;
}

VirtualRep GrothendieckRing::power(const VirtualRep& x, long e) const {
  if (e < 1) fail(ErrorCode::PreconditionViolated, "power exponent must be >= 1");
  VirtualRep out = x;
  for (long i = 1; i < e; ++i) out = tensor(out, x);
  return out;
}

VirtualRep GrothendieckRing::parallel_power(long t, long e) const {
  const auto key = std::make_pair(t, e);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = parallel_cache_.find(key);
    if (it != parallel_cache_.end()) return it->second;
  }
  SymProduct sp;
  sp.det_exp = 0;
  sp.m.assign(static_cast<size_t>(field_.f), t);
  VirtualRep base = e > 1 ? parallel_power(t, e - 1) : straighten(sp);
  VirtualRep r = e > 1 ? tensor(base, parallel_power(t, 1)) : base;
  std::lock_guard<std::mutex> lock(mu_);
  return parallel_cache_.emplace(key, std::move(r)).first->second;
}

}  // namespace gl2groth
