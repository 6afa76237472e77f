#include "gl2groth/serre.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <string>

#include "gl2groth/errors.hpp"

namespace gl2groth {

InertialCharacter::InertialCharacter(BaseField local_field, std::vector<long> exponents)
    : field_(std::move(local_field)), exps_(std::move(exponents)) {
  if (static_cast<int>(exps_.size()) != field_.f) {
    fail(ErrorCode::BadInput, "inertial character needs one exponent per embedding");
  }
  for (auto& e : exps_) e = field_.reduce_det(e);
}

InertialCharacter InertialCharacter::from_aggregate(const BaseField& local_field, long long agg) {
  std::vector<long> exps(static_cast<size_t>(local_field.f), 0);
  exps[0] = local_field.reduce_det(agg);
  return InertialCharacter(local_field, std::move(exps));
}

long InertialCharacter::aggregate() const {
  long long agg = 0;
  for (int i = 0; i < field_.f; ++i) {
    agg += static_cast<long long>(exps_[i]) * field_.ppow[i];
  }
  return field_.reduce_det(agg);
}

bool InertialCharacter::operator==(const InertialCharacter& o) const {
  return field_ == o.field_ && aggregate() == o.aggregate();
}

long delta(long p, const std::vector<PlaceData>& places) {
  if (places.empty()) fail(ErrorCode::BadInput, "profile needs at least one place");
  long d = 1;
  for (const auto& pl : places) {
    if (pl.e < 1 || pl.f < 1) fail(ErrorCode::BadInput, "place needs e, f >= 1");
    long step = (p - 1) / std::gcd(p - 1, pl.e);
    d = std::lcm(d, step);
  }
  return d;
}

long delta(const RamificationProfile& profile) { return delta(profile.p, profile.places); }

namespace {

// solves a * y == c mod m; returns the class of y or empty
std::optional<Residue> solve_linear_congruence(long long a, long long c, long m) {
  a = ((a % m) + m) % m;
  c = ((c % m) + m) % m;
  long g = std::gcd(static_cast<long>(a), m);  // gcd(0, m) = m
  if (c % g != 0) return std::nullopt;
  long m2 = m / g;
  if (m2 <= 1) return Residue{0, 1};
  long long a2 = (a / g) % m2, c2 = (c / g) % m2;
  long long t = 0, newt = 1, r = m2, newr = a2;
  while (newr != 0) {
    long long qu = r / newr;
    long long tmp = t - qu * newt;
    t = newt;
    newt = tmp;
    tmp = r - qu * newr;
    r = newr;
    newr = tmp;
  }
  long long inv = ((t % m2) + m2) % m2;
  return Residue{static_cast<long>((c2 * inv) % m2), m2};
}

}  // namespace

std::optional<Residue> weight_central_character(const BaseField& local_field,
                                                const Weight& sigma_v, long e_v) {
  if (e_v < 1) fail(ErrorCode::PreconditionViolated, "e_v must be >= 1");
  long trace = 0;
  for (long pp : local_field.ppow) trace += pp;
  long c = central_character_exponent(local_field, sigma_v);
  // e_v (k-2) trace == c mod q_v - 1
  auto cls = solve_linear_congruence(static_cast<long long>(e_v) * trace, c, local_field.qm1);
  if (!cls) return std::nullopt;
  // shift k-2 -> k; the modulus is (p-1)/gcd(p-1, e_v)
  long modulus = cls->modulus;
  long k = ((cls->value + 2) % modulus + modulus) % modulus;
  return Residue{k, modulus};
}

InertialCharacter det_inertia_from_weight(const BaseField& local_field,
                                          const Weight& sigma_v, long e_v) {
  if (e_v < 1) fail(ErrorCode::PreconditionViolated, "e_v must be >= 1");
  long trace = 0;
  for (long pp : local_field.ppow) trace += pp;
  // central character prod tau^{c_tau - 2 e_v}  =>  det rho|I_v = prod omega^{c_tau - e_v},
  // i.e. aggregate exponent c + e_v * trace
  long long agg = central_character_exponent(local_field, sigma_v) +
                  static_cast<long long>(e_v) * trace;
  return InertialCharacter::from_aggregate(local_field, agg);
}

std::optional<Residue> is_cyclotomic_power(const InertialCharacter& chi, long e_v) {
  if (e_v < 1) fail(ErrorCode::PreconditionViolated, "e_v must be >= 1");
  const BaseField& field = chi.local_field();
  long trace = 0;
  for (long pp : field.ppow) trace += pp;
  // chi = (epsilon bar)^{k-1}: e_v (k-1) trace == aggregate mod q_v - 1
  return solve_linear_congruence(static_cast<long long>(e_v) * trace, chi.aggregate(),
                                 field.qm1);
}

LiftWeightSchedule lift_weight_schedule(const RamificationProfile& profile,
                                        const std::vector<std::vector<Weight>>& weights_per_place,
                                        long t_max) {
  if (profile.k < 2) fail(ErrorCode::BadInput, "k must be >= 2");
  if (!weights_per_place.empty() && weights_per_place.size() != profile.places.size()) {
    fail(ErrorCode::BadInput, "weights must be supplied per place");
  }
  LiftWeightSchedule out;
  out.k = profile.k;
  out.delta = delta(profile);

  struct PlaceWork {
    std::unique_ptr<GrothendieckRing> ring;
    std::vector<Weight> weights;
    long e;
  };
  std::vector<PlaceWork> work;
  for (size_t v = 0; v < profile.places.size(); ++v) {
    const PlaceData& pl = profile.places[v];
    BaseField kv = BaseField::make(profile.p, pl.f);
    std::vector<Weight> weights;
    if (!weights_per_place.empty()) {
      for (const Weight& w : weights_per_place[v]) {
        if (!is_valid_weight(kv, w)) {
          fail(ErrorCode::OutOfRangeExponent, "supplied weight is not a basis label");
        }
        auto cls = weight_central_character(kv, w, pl.e);
        if (!cls || !cls->contains(profile.k)) {
          fail(ErrorCode::CentralCharacterMismatch,
               "supplied weight at place " + std::to_string(v) +
                   " has central character inconsistent with k = " + std::to_string(profile.k));
        }
        weights.push_back(w);
      }
    } else {
      for (const Weight& w : all_weights(kv)) {
        auto cls = weight_central_character(kv, w, pl.e);
        if (cls && cls->contains(profile.k)) weights.push_back(w);
      }
    }
    work.push_back(PlaceWork{std::make_unique<GrothendieckRing>(kv), std::move(weights), pl.e});
  }

  // smallest n with k-2+n*delta >= 0 such that every weight is dominated at
  // n, n+1 and n+2 (the tested window of "for all n >= n0")
  auto dominated_at = [&](long n) {
    long t = profile.k - 2 + n * out.delta;
    if (t < 0) return false;
    for (const auto& pw : work) {
      for (const Weight& w : pw.weights) {
        if (!leq(VirtualRep::basis(pw.ring->field(), w), pw.ring->parallel_power(t, pw.e))) {
          return false;
        }
      }
    }
    return true;
  };

  long n = 0;
  while (profile.k - 2 + n * out.delta < 0) ++n;
  bool found = false;
  for (; profile.k - 2 + (n + 2) * out.delta <= t_max; ++n) {
    if (dominated_at(n) && dominated_at(n + 1) && dominated_at(n + 2)) {
      found = true;
      break;
    }
  }
  if (!found) {
    fail(ErrorCode::SizeBound,
         "no n0 with a verified window inside t_max = " + std::to_string(t_max));
  }
  out.n0 = n;
  for (long i = 0; i < 3; ++i) out.sample_weights.push_back(profile.k + (n + i) * out.delta);

  for (size_t v = 0; v < work.size(); ++v) {
    PlaceReport rep;
    rep.place = profile.places[v];
    rep.weights = work[v].weights;
    for (const Weight& w : work[v].weights) {
      rep.certificates.push_back(dominate_parallel_weight(*work[v].ring, w, work[v].e));
    }
    out.places.push_back(std::move(rep));
  }
  return out;
}

}  // namespace gl2groth
