#include <doctest.h>

#include <random>

#include "gl2groth/brauer.hpp"
#include "gl2groth/errors.hpp"
#include "gl2groth/ring.hpp"

using namespace gl2groth;

namespace {

constexpr long long kRankPrime = 2147483629;  // 31-bit prime for rank checks

long long mod_pow(long long b, long long e, long long m) {
  long long r = 1;
  b %= m;
  while (e > 0) {
    if (e & 1) r = (__int128)r * b % m;
    b = (__int128)b * b % m;
    e >>= 1;
  }
  return r;
}

// rank over F_kRankPrime of the flattened character matrix; full row rank
// certifies linear independence over Q
long rank_mod_p(std::vector<std::vector<long long>> rows) {
  const long long P = kRankPrime;
  size_t rank = 0;
  size_t cols = rows.empty() ? 0 : rows[0].size();
  for (size_t c = 0; c < cols && rank < rows.size(); ++c) {
    size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] % P == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    long long inv = mod_pow(((rows[rank][c] % P) + P) % P, P - 2, P);
    for (size_t r = rank + 1; r < rows.size(); ++r) {
      long long factor = ((rows[r][c] % P) + P) % P;
      if (factor == 0) continue;
      factor = (__int128)factor * inv % P;
      for (size_t cc = c; cc < cols; ++cc) {
        rows[r][cc] = ((rows[r][cc] - (__int128)factor * rows[rank][cc]) % P + P) % P;
      }
    }
    ++rank;
  }
  return static_cast<long>(rank);
}

}  // namespace

TEST_CASE("class counts match q(q-1)") {
  CHECK(BrauerTable(BaseField::make(2, 1)).classes().size() == 2);
  CHECK(BrauerTable(BaseField::make(3, 1)).classes().size() == 6);
  CHECK(BrauerTable(BaseField::make(2, 2)).classes().size() == 12);
  CHECK(BrauerTable(BaseField::make(5, 1)).classes().size() == 20);
  CHECK(BrauerTable(BaseField::make(5, 2), 27).classes().size() == 600);
}

TEST_CASE("size bound") {
  CHECK_THROWS_AS(BrauerTable(BaseField::make(5, 3)), DomainError);
  CHECK_THROWS_AS(BrauerTable(BaseField::make(2, 2), 3), DomainError);
}

TEST_CASE("unit character is all ones; identity value is the dimension") {
  for (auto [p, f] : {std::pair<long, int>{2, 1}, {3, 1}, {2, 2}, {3, 2}}) {
    BaseField field = BaseField::make(p, f);
    BrauerTable oracle(field);
    GrothendieckRing ring(field);

    auto ones = oracle.brauer_char(VirtualRep::unit(field));
    for (const auto& v : ones) {
      CycloValue one(oracle.modulus());
      one.add_monomial(0, 1);
      CHECK(v == one);
    }

    // identity class is Central with dlog 0
    const PRegularClass& id = oracle.classes()[0];
    REQUIRE(id.kind == PRegularClass::Kind::Central);
    REQUIRE(id.dlog_lambda == 0);
    for (long k = 0; k <= 8; ++k) {
      VirtualRep x = ring.sym_class(0, k);
      CycloValue expect(oracle.modulus());
      expect.add_monomial(0, k + 1);
      CycloValue got(oracle.modulus());
      for (const auto& [w, c] : x.terms()) {
        CycloValue v = oracle.value(w, id);
        for (long e = 0; e < v.modulus(); ++e) {
          if (v.coeffs()[static_cast<size_t>(e)]) {
            got.add_monomial(e, v.coeffs()[static_cast<size_t>(e)] * c);
          }
        }
      }
      CHECK(got == expect);
    }
  }
}

TEST_CASE("chars_equal: reflexive, detects the defining straightening identity") {
  BaseField field = BaseField::make(3, 1);
  GrothendieckRing ring(field);
  BrauerTable oracle(field);

  VirtualRep sp = ring.sym_class(0, 3);
  CHECK(oracle.chars_equal(sp, sp));

  // [Sym^p] = [Sym^1] + [det (x) Sym^{p-2}]
  VirtualRep rhs = ring.sym_class(0, 1) + ring.det_twist(ring.sym_class(0, 1), 1);
  CHECK(oracle.chars_equal(sp, rhs));
}

TEST_CASE("basis characters are pairwise distinct at q = 3") {
  BaseField field = BaseField::make(3, 1);
  BrauerTable oracle(field);
  auto weights = all_weights(field);
  REQUIRE(weights.size() == 6);
  for (size_t i = 0; i < weights.size(); ++i) {
    for (size_t j = i + 1; j < weights.size(); ++j) {
      CHECK_FALSE(oracle.chars_equal(VirtualRep::basis(field, weights[i]),
                                     VirtualRep::basis(field, weights[j])));
    }
  }
}

TEST_CASE("basis characters are pairwise distinct for q <= 5") {
  for (auto [p, f] : {std::pair<long, int>{2, 1}, {2, 2}, {5, 1}}) {
    BaseField field = BaseField::make(p, f);
    BrauerTable oracle(field);
    auto weights = all_weights(field);
    std::vector<std::vector<CycloValue>> chars;
    for (const auto& w : weights) {
      chars.push_back(oracle.brauer_char(VirtualRep::basis(field, w)));
    }
    for (size_t i = 0; i < weights.size(); ++i) {
      for (size_t j = i + 1; j < weights.size(); ++j) {
        CHECK_FALSE(chars[i] == chars[j]);
      }
    }
  }
}

TEST_CASE("basis characters are linearly independent (rank over Q) for q <= 9") {
  for (auto [p, f] : {std::pair<long, int>{2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
    BaseField field = BaseField::make(p, f);
    BrauerTable oracle(field);
    auto weights = all_weights(field);
    std::vector<std::vector<long long>> rows;
    for (const auto& w : weights) {
      std::vector<long long> row;
      for (const auto& cls : oracle.classes()) {
        const auto& coeffs = oracle.value(w, cls).coeffs();
        row.insert(row.end(), coeffs.begin(), coeffs.end());
      }
      rows.push_back(std::move(row));
    }
    CHECK(rank_mod_p(std::move(rows)) == static_cast<long>(weights.size()));
  }
}

TEST_CASE("central class values recover the central character exponent") {
  for (auto [p, f] : {std::pair<long, int>{3, 1}, {2, 2}, {5, 1}, {3, 2}}) {
    BaseField field = BaseField::make(p, f);
    BrauerTable oracle(field);
    const long step = field.q + 1;
    for (const Weight& w : all_weights(field)) {
      long c = central_character_exponent(field, w);
      for (long s = 0; s < field.qm1; ++s) {
        PRegularClass central{PRegularClass::Kind::Central, step * s, step * s};
        CycloValue expect(oracle.modulus());
        expect.add_monomial(static_cast<long long>(step) * s * c, weight_dimension(w));
        CHECK(oracle.value(w, central) == expect);
      }
    }
  }
}

TEST_CASE("strict cyclotomic mode agrees with the group-ring mode") {
  for (auto [p, f] : {std::pair<long, int>{2, 2}, {3, 1}, {5, 1}}) {
    BaseField field = BaseField::make(p, f);
    GrothendieckRing ring(field);
    BrauerTable oracle(field);
    std::mt19937_64 rng(static_cast<unsigned long>(13 * p + f));
    for (int rep = 0; rep < 30; ++rep) {
      VirtualRep x(field);
      VirtualRep y(field);
      for (int t = 0; t < 2; ++t) {
        x.add_term(weight_from_index(field, static_cast<long>(
                       rng() % static_cast<unsigned long>(field.qm1 * field.q))),
                   static_cast<long>(rng() % 5) - 2);
        y.add_term(weight_from_index(field, static_cast<long>(
                       rng() % static_cast<unsigned long>(field.qm1 * field.q))),
                   static_cast<long>(rng() % 5) - 2);
      }
      CHECK(oracle.chars_equal(x, y) == oracle.chars_equal_strict(x, y));
    }
    // straightening identities must also hold strictly
    for (long k = 0; k <= 10; ++k) {
      SymProduct sp;
      sp.det_exp = 0;
      sp.m.assign(static_cast<size_t>(f), 0);
      sp.m[0] = k;
      CHECK(oracle.chars_equal_strict(ring.straighten(sp), ring.straighten(sp)));
    }
  }
}

TEST_CASE("generator polynomial is deterministic and primitive") {
  BrauerTable a(BaseField::make(3, 1));
  BrauerTable b(BaseField::make(3, 1));
  CHECK(a.generator_poly() == b.generator_poly());
  CHECK(a.generator_poly().size() == 3);  // degree 2f = 2
  CHECK(a.modulus() == 8);
}
