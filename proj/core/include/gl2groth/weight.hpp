#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "gl2groth/base_field.hpp"

namespace gl2groth {

// Label (a mod q-1, n in {0..p-1}^f) of the irreducible det^a (x) S_n.
// Ordered by (a, n lexicographic); that order is also the canonical term
// order of VirtualRep and of the JSON encoding.
struct Weight {
  long a = 0;
  std::vector<int> n;

  auto operator<=>(const Weight&) const = default;
};

// Builds a normalized Weight: a reduced mod q-1, each n_i checked to lie in
// [0, p-1].  Throws OutOfRangeExponent otherwise.
Weight normalize(const BaseField& field, long long a, const std::vector<long>& n);

bool is_valid_weight(const BaseField& field, const Weight& w);

// prod (n_i + 1)
long long weight_dimension(const Weight& w);

// 2a + sum n_i p^i mod q-1: the exponent through which the center acts
// (z acting by tau_0(z)^c).
long central_character_exponent(const BaseField& field, const Weight& w);

// Smallest s >= 1 such that the central character equals N_{F/F_p}^{e s},
// i.e. c == e*s*(1 + p + ... + p^{f-1}) mod q-1.  Empty if no s exists.
std::optional<long> norm_power_form(const BaseField& field, const Weight& w, long e);

// dense index in [0, (q-1)*q): a*q + sum n_i p^i
long weight_index(const BaseField& field, const Weight& w);
Weight weight_from_index(const BaseField& field, long idx);

// all (q-1)*p^f basis weights, in index order
std::vector<Weight> all_weights(const BaseField& field);

}  // namespace gl2groth
