#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gl2groth/base_field.hpp"
#include "gl2groth/virtual_rep.hpp"

namespace gl2groth {

// p-regular (= semisimple) conjugacy class of GL_2(F_q).  Eigenvalues are
// stored as discrete logs of a fixed generator of F_{q^2}^x: Central has
// lambda = mu in F_q^x, Split has lambda != mu in F_q^x (unordered), NonSplit
// has lambda in F_{q^2} \ F_q paired with lambda^q.
struct PRegularClass {
  enum class Kind { Central, Split, NonSplit };
  Kind kind;
  long dlog_lambda;
  long dlog_mu;
};

const char* to_string(PRegularClass::Kind k);

// Value of a Brauer character at one class: an element of the group ring
// Z[x]/(x^N - 1), N = q^2 - 1, under the fixed Teichmueller-consistent root
// assignment x = lift of the chosen generator.  Equality in this ring implies
// equality of the character values under every embedding into C.
class CycloValue {
 public:
  explicit CycloValue(long modulus) : c_(static_cast<size_t>(modulus), 0) {}

  long modulus() const { return static_cast<long>(c_.size()); }
  void add_monomial(long long exp, long long coeff);
  const std::vector<long long>& coeffs() const { return c_; }
  bool is_zero() const;

  bool operator==(const CycloValue&) const = default;
  CycloValue operator*(const CycloValue& o) const;  // cyclic convolution
  CycloValue& operator+=(const CycloValue& o);

  std::string to_poly_string() const;

 private:
  std::vector<long long> c_;
};

inline constexpr long kDefaultMaxQ = 27;

// Exact Brauer characters on the q(q-1) p-regular classes of GL_2(F_q).
// F_{q^2} is realized as F_p[y]/(g) for the lexicographically smallest monic
// primitive polynomial g of degree 2f, with a full discrete-log table, so the
// class enumeration and root assignment are reproducible.
class BrauerTable {
 public:
  explicit BrauerTable(BaseField field, long max_q = kDefaultMaxQ);

  const BaseField& field() const { return field_; }
  long modulus() const { return order_; }  // q^2 - 1
  const std::vector<long>& generator_poly() const { return gen_poly_; }
  const std::vector<PRegularClass>& classes() const { return classes_; }

  // character of det^a (x) S_n at one class:
  // (lt*mt)^a * prod_i sum_{j<=n_i} lt^{p^i j} mt^{p^i (n_i - j)}
  // with lt, mt the Teichmueller lifts of the eigenvalues
  CycloValue value(const Weight& w, const PRegularClass& cls) const;

  std::vector<CycloValue> brauer_char(const VirtualRep& x) const;

  // direct character of Sym^k_{[i]}, k >= 0, independent of straightening
  CycloValue sym_value(long i, long k, const PRegularClass& cls) const;
  std::vector<CycloValue> sym_char(long i, long k) const;

  bool chars_equal(const VirtualRep& x, const VirtualRep& y) const;
  bool sym_chars_equal(const VirtualRep& x, long i, long k) const;

  // strict mode: compare after reduction to Z[x]/Phi_N(x), the genuine
  // cyclotomic integer ring of the root assignment
  bool chars_equal_strict(const VirtualRep& x, const VirtualRep& y) const;
  std::vector<long long> reduce_strict(const CycloValue& v) const;
  const std::vector<long long>& cyclotomic_polynomial() const { return phi_; }

 private:
  void build_field_tables();
  void build_classes();
  void build_cyclotomic();
  long dlog_of(const std::vector<long>& elem) const;

  BaseField field_;
  long order_ = 0;                    // q^2 - 1
  std::vector<long> gen_poly_;        // monic, coefficients c_0..c_{2f-1}
  std::vector<std::vector<long>> pow_table_;  // g^j as coeff vectors
  std::vector<long> dlog_;            // encoded element -> dlog
  std::vector<PRegularClass> classes_;
  std::vector<long long> phi_;        // Phi_N(x), integer coefficients
  std::vector<std::vector<long long>> strict_table_;  // x^e mod Phi_N
};

}  // namespace gl2groth
