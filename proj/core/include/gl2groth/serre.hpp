#pragma once

#include <optional>
#include <vector>

#include "gl2groth/shift.hpp"

namespace gl2groth {

// One place v | p: ramification degree e_v and residue degree f_v.
struct PlaceData {
  long e = 1;
  int f = 1;
};

// Input of the lift-weight computation: the places above p and the target
// parallel weight k (k >= 2).
struct RamificationProfile {
  long p = 0;
  std::vector<PlaceData> places;
  long k = 2;
};

// residue class value mod modulus
struct Residue {
  long value = 0;
  long modulus = 1;

  bool contains(long x) const {
    long r = (x - value) % modulus;
    return r == 0;
  }
  bool operator==(const Residue&) const = default;
};

// Character of tame inertia written as prod_i omega_{tau_i}^{c_i} in the
// fixed basis tau_{v,0},...,tau_{v,f_v-1}.  Since omega_{tau_i} =
// omega_{tau_0}^{p^i}, equality of characters is equality of the aggregate
// exponent sum c_i p^i mod q_v - 1; individual c_i are display only.
class InertialCharacter {
 public:
  InertialCharacter(BaseField local_field, std::vector<long> exponents);
  static InertialCharacter from_aggregate(const BaseField& local_field, long long agg);

  const BaseField& local_field() const { return field_; }
  const std::vector<long>& exponents() const { return exps_; }
  long aggregate() const;

  bool operator==(const InertialCharacter& o) const;

 private:
  BaseField field_;
  std::vector<long> exps_;
};

// delta = lcm{ (p-1)/gcd(p-1, e_v) : v | p }
long delta(long p, const std::vector<PlaceData>& places);
long delta(const RamificationProfile& profile);

// The set of k with central character of sigma_v equal to N_{k_v/F_p}^{e_v(k-2)},
// as a residue class mod (p-1)/gcd(p-1, e_v); empty when no k is consistent.
std::optional<Residue> weight_central_character(const BaseField& local_field,
                                                const Weight& sigma_v, long e_v);

// det rho|_{I_v} determined by sigma_v: if the central character of sigma_v
// is prod_tau tau^{c_tau - 2 e_v} then det rho|_{I_v} = prod omega_tau^{c_tau - e_v};
// in aggregate form this is (central exponent) + e_v * sum p^i.
InertialCharacter det_inertia_from_weight(const BaseField& local_field,
                                          const Weight& sigma_v, long e_v);

// Solves chi = (epsilon_v bar)^{k-1} with epsilon_v bar = prod omega_tau^{e_v};
// returns the class of k-1 mod (p-1)/gcd(p-1, e_v), or empty when unsolvable.
std::optional<Residue> is_cyclotomic_power(const InertialCharacter& chi, long e_v);

struct PlaceReport {
  PlaceData place;
  std::vector<Weight> weights;
  std::vector<ShiftCertificate> certificates;
};

struct LiftWeightSchedule {
  long delta = 1;
  long n0 = 0;
  long k = 2;
  std::vector<long> sample_weights;  // k + n*delta for n = n0, n0+1, n0+2
  std::vector<PlaceReport> places;
};

// The explicit lift-weight data: delta, the threshold n0 (smallest n with
// k-2+n*delta >= 0 such that every tested sigma_v is a Jordan-Hoelder factor
// of S_{v,(k-2+n*delta,...)}^{(x) e_v} at n, n+1 and n+2), and a replayable
// certificate per weight.  weights_per_place may be empty (enumerate all
// weights consistent with k) or supply one list per place
// (CentralCharacterMismatch when a supplied weight is inconsistent).
LiftWeightSchedule lift_weight_schedule(
    const RamificationProfile& profile,
    const std::vector<std::vector<Weight>>& weights_per_place = {},
    long t_max = 200);

}  // namespace gl2groth
