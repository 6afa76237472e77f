#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gl2groth/ring.hpp"

namespace gl2groth {

// Weight-shifting inequalities, modeling theta operators and Hasse invariants.

// f = 1, n >= 0: [S_n] <= [det^{-1} (x) S_{n+p+1}]
bool check_theta_fp(const GrothendieckRing& ring, long n);

// f > 1, m, n >= 0:
// [Sym^m_{[i]} (x) Sym^n_{[i+1]}]
//   <= [det^{-p^{i+1}} (x) Sym^{m+p}_{[i]} (x) Sym^{n+1}_{[i+1]}]
bool check_theta_fq(const GrothendieckRing& ring, long i, long m, long n);

struct HasseResult {
  bool exceptional = false;
  long r = 0;
  bool is_plain() const { return !exceptional; }
};

// f = 1, n >= 0: [S_n] <= [S_{n+p-1}] unless n = r(p+1), in which case
// [S_n] <= [S_{n+p-1} + det^r].  Throws AssertionFailed if the inequality
// that should hold does not (an engine bug, not a data error).
HasseResult check_hasse_fp(const GrothendieckRing& ring, long n);

// f > 1, n p > m >= 0:
// [Sym^m_{[i]} (x) Sym^n_{[i+1]}] <= [Sym^{m+p}_{[i]} (x) Sym^{n-1}_{[i+1]}]
bool check_hasse_fq(const GrothendieckRing& ring, long i, long m, long n);

// f = 1, k >= 0: [S_k] <= [S_{k+p(p-1)}] (multiplication by the degree
// p(p-1) invariant; the shift is too coarse to replace the p-1 shift)
bool check_dickson_fp(const GrothendieckRing& ring, long k);

// One application of the composite theta inequality: for b_i >= 0,
// [S_m] <= [det^{-sum b_i p^i} (x) S_m'] with m'_i = m_i + b_i + p b_{i+1}.
// Returns the (unreduced) twist and the straightened target, extended
// linearly over the terms of x.  Requires f > 1.
std::pair<long long, VirtualRep> apply_bigtheta(const GrothendieckRing& ring,
                                                const VirtualRep& x,
                                                const std::vector<long>& b);

// Solution of the parallelization system
//   n'_0 - x_0 + p x_1 = n'_1 - x_1 + p x_2 = ... = n'_{f-1} - x_{f-1} + p x_0
// after the augmentation n''_i = n'_i + r(p^2-1).  x_0 is chosen minimal so
// that all x_j >= 0, and r minimal with r(p-1)(p^2-1) > n'_i - p n'_{i+1}
// + 2p x_{i+1} for all i.  Requires sum_i n'_{i+j} p^i divisible by
// sum_i p^i for each j (DivisibilityFailed otherwise).
struct SystemSolution {
  std::vector<long> nprime;
  std::vector<long> x;
  long r = 0;
  long t = 0;  // common value n''_i - x_i + p x_{i+1}
};
SystemSolution solve_system(const BaseField& field, const std::vector<long>& nprime);

enum class StepKind { ThetaFp, ThetaFq, HasseFp, HasseFq, DicksonFp, TensorSurjection };

const char* to_string(StepKind k);
std::optional<StepKind> step_kind_from_string(const std::string& s);

struct ShiftStep {
  StepKind kind;
  int i = 0;            // HasseFq: embedding index
  std::vector<long> b;  // ThetaFq: shift vector
  long e = 0;           // TensorSurjection: tensor exponent

  bool operator==(const ShiftStep&) const = default;
};

// Replayable proof of [sigma] <= [S_{(t,...,t)}^{(x) e}].  intermediates are
// the chain states (after each non-surjection step, starting from sigma);
// they are stored for inspection and cross-checked on replay, never trusted.
struct ShiftCertificate {
  BaseField field;
  Weight sigma;
  long e = 1;
  long s = 0;
  long t = 0;
  std::vector<ShiftStep> steps;
  std::vector<SymProduct> intermediates;
};

struct DominateOptions {
  long min_t = -1;  // extend the chain so that t >= min_t (same congruence)
};

// Constructive proof of the domination [sigma] <= [S_{(t,...,t)}^{(x) e}]
// with an explicit t == s mod (p-1)/gcd(p-1,e):
//   e = f = 1: theta chain to t_0 = n + a(p+1), with a replaced by a+p-1
//     when n = 0 so that t_0 >= p^2-1, followed by the exceptional Hasse
//     step past t_0 (which needs 2[det^r] <= [S_{t_0}]);
//   e = 1, f > 1: composite theta shift by the base-p digits of a, the
//     r-augmentation, then the Hasse induction given by solve_system;
//   e > 1: the e = 1 chain up to e*t followed by the surjection
//     (Sym^t)^{(x) e} ->> Sym^{et}.
// Throws NoNormPowerForm when sigma has no norm-power central character.
ShiftCertificate dominate_parallel_weight(const GrothendieckRing& ring,
                                          const Weight& sigma, long e,
                                          const DominateOptions& opts = {});

struct ReplayReport {
  bool ok = false;
  std::size_t failed_step = static_cast<std::size_t>(-1);
  std::string reason;
};

// Recomputes every step of the certificate using only ring operations:
// chain consistency, each step's inequality (with the sigma-aware obligations
// at exceptional Hasse points), the congruence t == s, and the final claim
// [sigma] <= [S_{(t,...,t)}^{(x) e}] checked directly.
ReplayReport replay_certificate(const GrothendieckRing& ring,
                                const ShiftCertificate& cert);

// All t <= t_max with t == s mod (p-1)/gcd(p-1,e) and
// [sigma] <= [S_{(t,...,t)}^{(x) e}]; the independent oracle for
// dominate_parallel_weight.
std::vector<long> brute_force_min_t(const GrothendieckRing& ring,
                                    const Weight& sigma, long e,
                                    long t_max = 200);

long congruence_period(const BaseField& field, long e);

}  // namespace gl2groth
