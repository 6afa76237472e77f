#include "gl2groth/brauer.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "gl2groth/errors.hpp"

namespace gl2groth {

const char* to_string(PRegularClass::Kind k) {
  switch (k) {
    case PRegularClass::Kind::Central: return "Central";
    case PRegularClass::Kind::Split: return "Split";
    case PRegularClass::Kind::NonSplit: return "NonSplit";
  }
  return "?";
}

void CycloValue::add_monomial(long long exp, long long coeff) {
  const long n = modulus();
  long long e = exp % n;
  if (e < 0) e += n;
  auto& slot = c_[static_cast<size_t>(e)];
  slot = checked_add(slot, coeff);
}

bool CycloValue::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](long long v) { return v == 0; });
}

CycloValue CycloValue::operator*(const CycloValue& o) const {
  CycloValue r(modulus());
  const long n = modulus();
  for (long i = 0; i < n; ++i) {
    if (c_[static_cast<size_t>(i)] == 0) continue;
    for (long j = 0; j < n; ++j) {
      if (o.c_[static_cast<size_t>(j)] == 0) continue;
      long k = i + j;
      if (k >= n) k -= n;
      auto& slot = r.c_[static_cast<size_t>(k)];
      slot = checked_add(slot, checked_mul(c_[static_cast<size_t>(i)], o.c_[static_cast<size_t>(j)]));
    }
  }
  return r;
}

CycloValue& CycloValue::operator+=(const CycloValue& o) {
  for (size_t i = 0; i < c_.size(); ++i) c_[i] = checked_add(c_[i], o.c_[i]);
  return *this;
}

std::string CycloValue::to_poly_string() const {
  std::string s;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!s.empty() && c_[i] > 0) s += "+";
    if (i == 0) {
      s += std::to_string(c_[i]);
    } else {
      if (c_[i] == -1) s += "-";
      else if (c_[i] != 1) s += std::to_string(c_[i]) + "*";
      s += "x^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

namespace {

// --- polynomial helpers over F_p (coefficient vectors, low degree first) ---

std::vector<long> poly_mul_mod(const std::vector<long>& a, const std::vector<long>& b,
                               const std::vector<long>& g, long p) {
  const size_t d = g.size() - 1;  // g monic of degree d
  std::vector<long> prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
  }
  for (size_t k = prod.size(); k-- > d;) {
    long c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (size_t i = 0; i < d; ++i) {
      prod[k - d + i] = ((prod[k - d + i] - c * g[i]) % p + p) % p;
    }
  }
  prod.resize(d);
  return prod;
}

std::vector<long> poly_powmod(std::vector<long> base, long long exp,
                              const std::vector<long>& g, long p) {
  const size_t d = g.size() - 1;
  std::vector<long> acc(d, 0);
  acc[0] = 1;
  while (exp > 0) {
    if (exp & 1) acc = poly_mul_mod(acc, base, g, p);
    base = poly_mul_mod(base, base, g, p);
    exp >>= 1;
  }
  return acc;
}

bool is_one(const std::vector<long>& v) {
  if (v.empty() || v[0] != 1) return false;
  for (size_t i = 1; i < v.size(); ++i) {
    if (v[i] != 0) return false;
  }
  return true;
}

std::vector<long> prime_factors(long n) {
  std::vector<long> out;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// y has multiplicative order p^d - 1 in F_p[y]/(g) iff g is irreducible
// (Rabin) and y^{N/l} != 1 for every prime l | N.
bool is_primitive_poly(const std::vector<long>& g, long p, int d, long order) {
  std::vector<long> y(static_cast<size_t>(d), 0);
  y[1] = 1;  // d = 2f >= 2

  // irreducibility: y^{p^d} == y mod g, and y^{p^{d/l}} != y for prime l | d
  long long pd = 1;
  for (int i = 0; i < d; ++i) pd *= p;
  std::vector<long> yp = poly_powmod(y, pd, g, p);
  if (yp != y) return false;
  for (long l : prime_factors(d)) {
    long long e = 1;
    for (int i = 0; i < d / l; ++i) e *= p;
    if (poly_powmod(y, e, g, p) == y) return false;
  }

  for (long l : prime_factors(order)) {
    if (is_one(poly_powmod(y, order / l, g, p))) return false;
  }
  return true;
}

}  // namespace

BrauerTable::BrauerTable(BaseField field, long max_q) : field_(std::move(field)) {
  if (field_.q > max_q) {
    fail(ErrorCode::SizeBound, "q = " + std::to_string(field_.q) +
                                   " exceeds the oracle bound q <= " + std::to_string(max_q));
  }
  order_ = field_.q * field_.q - 1;
  build_field_tables();
  build_classes();
  build_cyclotomic();
}

void BrauerTable::build_field_tables() {
  const long p = field_.p;
  const int d = 2 * field_.f;

  // Smallest monic primitive polynomial of degree 2f, coefficients
  // enumerated as base-p digits (c_0 least significant).
  long pd = 1;
  for (int i = 0; i < d; ++i) pd *= p;
  std::vector<long> g;
  for (long code = 0; code < pd; ++code) {
    std::vector<long> cand(static_cast<size_t>(d + 1), 0);
    long c = code;
    for (int i = 0; i < d; ++i) {
      cand[static_cast<size_t>(i)] = c % p;
      c /= p;
    }
    cand[static_cast<size_t>(d)] = 1;
    if (cand[0] == 0) continue;  // y must be a unit
    if (is_primitive_poly(cand, p, d, order_)) {
      g = std::move(cand);
      break;
    }
  }
  if (g.empty()) fail(ErrorCode::AssertionFailed, "no primitive polynomial found");
  gen_poly_ = g;

  // full power table of the generator and the inverse discrete-log map
  pow_table_.resize(static_cast<size_t>(order_));
  dlog_.assign(static_cast<size_t>(pd), -1);
  std::vector<long> cur(static_cast<size_t>(d), 0);
  cur[0] = 1;
  std::vector<long> y(static_cast<size_t>(d), 0);
  y[1] = 1;
  for (long j = 0; j < order_; ++j) {
    long code = 0;
    for (int i = d - 1; i >= 0; --i) code = code * p + cur[static_cast<size_t>(i)];
    if (dlog_[static_cast<size_t>(code)] != -1) {
      fail(ErrorCode::AssertionFailed, "generator order smaller than q^2-1");
    }
    dlog_[static_cast<size_t>(code)] = j;
    pow_table_[static_cast<size_t>(j)] = cur;
    cur = poly_mul_mod(cur, y, g, p);
  }
  if (!is_one(cur)) fail(ErrorCode::AssertionFailed, "generator does not close the cycle");
}

void BrauerTable::build_classes() {
  const long q = field_.q;
  const long step = q + 1;  // F_q^x = <g^{q+1}>

  for (long s = 0; s < q - 1; ++s) {
    classes_.push_back({PRegularClass::Kind::Central, step * s, step * s});
  }
  for (long s = 0; s < q - 1; ++s) {
    for (long t = s + 1; t < q - 1; ++t) {
      classes_.push_back({PRegularClass::Kind::Split, step * s, step * t});
    }
  }
  for (long j = 0; j < order_; ++j) {
    if (j % step == 0) continue;  // lies in F_q
    long conj = (j * q) % order_;
    if (conj < j) continue;  // keep the smaller representative of {j, jq}
    classes_.push_back({PRegularClass::Kind::NonSplit, j, conj});
  }
  const long expected = q * (q - 1);
  if (static_cast<long>(classes_.size()) != expected) {
    fail(ErrorCode::AssertionFailed, "class count mismatch");
  }
}

CycloValue BrauerTable::value(const Weight& w, const PRegularClass& cls) const {
  CycloValue v(order_);
  const long dl = cls.dlog_lambda, dm = cls.dlog_mu;
  // nested expansion of prod_i sum_{j=0}^{n_i} lt^{p^i j} mt^{p^i (n_i - j)}
  std::vector<long> j(static_cast<size_t>(field_.f), 0);
  const long long det = static_cast<long long>(w.a) * (dl + dm);
  while (true) {
    long long e = det;
    for (int i = 0; i < field_.f; ++i) {
      e += static_cast<long long>(field_.ppow[i]) *
           (j[i] * dl + (w.n[i] - j[i]) * dm);
    }
    v.add_monomial(e, 1);

    int carry = 0;
    while (carry < field_.f) {
      if (j[carry] < w.n[carry]) {
        ++j[carry];
        break;
      }
      j[carry] = 0;
      ++carry;
    }
    if (carry == field_.f) break;
  }
  return v;
}

std::vector<CycloValue> BrauerTable::brauer_char(const VirtualRep& x) const {
  if (x.field() != field_) fail(ErrorCode::FieldMismatch, "rep over a different base field");
  std::vector<CycloValue> out(classes_.size(), CycloValue(order_));
  for (size_t ci = 0; ci < classes_.size(); ++ci) {
    for (const auto& [w, c] : x.terms()) {
      CycloValue v = value(w, classes_[ci]);
      for (long long e = 0; e < v.modulus(); ++e) {
        long long coeff = v.coeffs()[static_cast<size_t>(e)];
        if (coeff != 0) out[ci].add_monomial(e, checked_mul(coeff, c));
      }
    }
  }
  return out;
}

CycloValue BrauerTable::sym_value(long i_raw, long k, const PRegularClass& cls) const {
  if (k < 0) fail(ErrorCode::PreconditionViolated, "direct character needs k >= 0");
  const int i = field_.emb(i_raw);
  CycloValue v(order_);
  for (long j = 0; j <= k; ++j) {
    long long e = static_cast<long long>(field_.ppow[i]) *
                  (j * cls.dlog_lambda + (k - j) * cls.dlog_mu);
    v.add_monomial(e, 1);
  }
  return v;
}

std::vector<CycloValue> BrauerTable::sym_char(long i, long k) const {
  std::vector<CycloValue> out;
  out.reserve(classes_.size());
  for (const auto& cls : classes_) out.push_back(sym_value(i, k, cls));
  return out;
}

bool BrauerTable::chars_equal(const VirtualRep& x, const VirtualRep& y) const {
  if (x.field() != y.field()) fail(ErrorCode::FieldMismatch, "mixed base fields");
  if (x.field() != field_) fail(ErrorCode::FieldMismatch, "rep over a different base field");
  VirtualRep diff = x - y;
  if (diff.is_zero()) return true;
  for (const auto& cls : classes_) {
    CycloValue acc(order_);
    for (const auto& [w, c] : diff.terms()) {
      CycloValue v = value(w, cls);
      for (long long e = 0; e < v.modulus(); ++e) {
        long long coeff = v.coeffs()[static_cast<size_t>(e)];
        if (coeff != 0) acc.add_monomial(e, checked_mul(coeff, c));
      }
    }
    if (!acc.is_zero()) return false;
  }
  return true;
}

bool BrauerTable::sym_chars_equal(const VirtualRep& x, long i, long k) const {
  for (const auto& cls : classes_) {
    CycloValue direct = sym_value(i, k, cls);
    CycloValue acc(order_);
    for (const auto& [w, c] : x.terms()) {
      CycloValue v = value(w, cls);
      for (long long e = 0; e < v.modulus(); ++e) {
        long long coeff = v.coeffs()[static_cast<size_t>(e)];
        if (coeff != 0) acc.add_monomial(e, checked_mul(coeff, c));
      }
    }
    if (!(acc == direct)) return false;
  }
  return true;
}

// Phi_N via Phi_N = (x^N - 1) / prod_{d | N, d < N} Phi_d, exact division in Z[x].
void BrauerTable::build_cyclotomic() {
  const long N = order_;
  std::vector<std::vector<long long>> phi_of(static_cast<size_t>(N) + 1);
  auto exact_div = [](std::vector<long long> num, const std::vector<long long>& den) {
    std::vector<long long> quot(num.size() - den.size() + 1, 0);
    for (size_t k = quot.size(); k-- > 0;) {
      long long c = num[k + den.size() - 1];  // den is monic
      quot[k] = c;
      if (c == 0) continue;
      for (size_t i = 0; i < den.size(); ++i) {
        num[k + i] = checked_add(num[k + i], checked_mul(-c, den[i]));
      }
    }
    return quot;
  };
  for (long d = 1; d <= N; ++d) {
    if (N % d != 0) continue;
    std::vector<long long> f(static_cast<size_t>(d) + 1, 0);
    f[0] = -1;
    f[static_cast<size_t>(d)] = 1;  // x^d - 1
    for (long e = 1; e < d; ++e) {
      if (d % e == 0) f = exact_div(std::move(f), phi_of[static_cast<size_t>(e)]);
    }
    phi_of[static_cast<size_t>(d)] = std::move(f);
  }
  phi_ = phi_of[static_cast<size_t>(N)];

  // x^e mod Phi_N for e = 0..N-1 by iterated shift-reduce; the rows are the
  // coordinates of the roots of unity in the power basis, so they stay small
  const size_t deg = phi_.size() - 1;
  strict_table_.assign(static_cast<size_t>(N), std::vector<long long>(deg, 0));
  std::vector<long long> cur(deg, 0);
  cur[0] = 1;
  for (long e = 0; e < N; ++e) {
    strict_table_[static_cast<size_t>(e)] = cur;
    long long top = cur[deg - 1];
    for (size_t i = deg - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0) {
      for (size_t i = 0; i < deg; ++i) {
        cur[i] = checked_add(cur[i], checked_mul(-top, phi_[i]));
      }
    }
  }
}

std::vector<long long> BrauerTable::reduce_strict(const CycloValue& v) const {
  const size_t deg = phi_.size() - 1;
  std::vector<long long> out(deg, 0);
  for (long e = 0; e < v.modulus(); ++e) {
    long long c = v.coeffs()[static_cast<size_t>(e)];
    if (c == 0) continue;
    const auto& row = strict_table_[static_cast<size_t>(e)];
    for (size_t i = 0; i < deg; ++i) out[i] = checked_add(out[i], checked_mul(c, row[i]));
  }
  return out;
}

bool BrauerTable::chars_equal_strict(const VirtualRep& x, const VirtualRep& y) const {
  VirtualRep diff = x - y;
  if (diff.is_zero()) return true;
  for (const auto& cls : classes_) {
    CycloValue acc(order_);
    for (const auto& [w, c] : diff.terms()) {
      CycloValue v = value(w, cls);
      for (long long e = 0; e < v.modulus(); ++e) {
        long long coeff = v.coeffs()[static_cast<size_t>(e)];
        if (coeff != 0) acc.add_monomial(e, checked_mul(coeff, c));
      }
    }
    auto red = reduce_strict(acc);
    if (!std::all_of(red.begin(), red.end(), [](long long t) { return t == 0; })) return false;
  }
  return true;
}

long BrauerTable::dlog_of(const std::vector<long>& elem) const {
  long code = 0;
  for (size_t i = elem.size(); i-- > 0;) code = code * field_.p + elem[i];
  return dlog_[static_cast<size_t>(code)];
}

}  // namespace gl2groth
