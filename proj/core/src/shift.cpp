#include "gl2groth/shift.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gl2groth/errors.hpp"

namespace gl2groth {

const char* to_string(StepKind k) {
  switch (k) {
    case StepKind::ThetaFp: return "ThetaFp";
    case StepKind::ThetaFq: return "ThetaFq";
    case StepKind::HasseFp: return "HasseFp";
    case StepKind::HasseFq: return "HasseFq";
    case StepKind::DicksonFp: return "DicksonFp";
    case StepKind::TensorSurjection: return "TensorSurjection";
  }
  return "?";
}

std::optional<StepKind> step_kind_from_string(const std::string& s) {
  if (s == "ThetaFp") return StepKind::ThetaFp;
  if (s == "ThetaFq") return StepKind::ThetaFq;
  if (s == "HasseFp") return StepKind::HasseFp;
  if (s == "HasseFq") return StepKind::HasseFq;
  if (s == "DicksonFp") return StepKind::DicksonFp;
  if (s == "TensorSurjection") return StepKind::TensorSurjection;
  return std::nullopt;
}

long congruence_period(const BaseField& field, long e) {
  return (field.p - 1) / std::gcd(field.p - 1, e);
}

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) fail(ErrorCode::PreconditionViolated, msg);
}

SymProduct single(const BaseField& field, long det, int i, long m) {
  SymProduct sp;
  sp.det_exp = det;
  sp.m.assign(static_cast<size_t>(field.f), 0);
  sp.m[static_cast<size_t>(i)] = m;
  return sp;
}

SymProduct pair_at(const BaseField& field, long long det, long i, long mi, long mi1) {
  SymProduct sp;
  sp.det_exp = det;
  sp.m.assign(static_cast<size_t>(field.f), 0);
  sp.m[static_cast<size_t>(field.emb(i))] += mi;
  sp.m[static_cast<size_t>(field.emb(i + 1))] += mi1;
  return sp;
}

}  // namespace

bool check_theta_fp(const GrothendieckRing& ring, long n) {
  const BaseField& field = ring.field();
  require(field.f == 1, "theta_fp needs f = 1");
  require(n >= 0, "theta_fp needs n >= 0");
  VirtualRep lhs = ring.straighten(single(field, 0, 0, n));
  VirtualRep rhs = ring.straighten(single(field, -1, 0, n + field.p + 1));
  return leq(lhs, rhs);
}

bool check_theta_fq(const GrothendieckRing& ring, long i, long m, long n) {
  const BaseField& field = ring.field();
  require(field.f > 1, "theta_fq needs f > 1");
  require(m >= 0 && n >= 0, "theta_fq needs m, n >= 0");
  VirtualRep lhs = ring.straighten(pair_at(field, 0, i, m, n));
  VirtualRep rhs = ring.straighten(
      pair_at(field, -field.ppow_at(i + 1), i, m + field.p, n + 1));
  return leq(lhs, rhs);
}

HasseResult check_hasse_fp(const GrothendieckRing& ring, long n) {
  const BaseField& field = ring.field();
  require(field.f == 1, "hasse_fp needs f = 1");
  require(n >= 0, "hasse_fp needs n >= 0");
  const long p = field.p;
  VirtualRep lhs = ring.straighten(single(field, 0, 0, n));
  VirtualRep rhs = ring.straighten(single(field, 0, 0, n + p - 1));
  if (n % (p + 1) != 0) {
    if (!leq(lhs, rhs)) {
      fail(ErrorCode::AssertionFailed, "[S_n] <= [S_{n+p-1}] failed at n = " + std::to_string(n));
    }
    return {false, 0};
  }
  const long r = n / (p + 1);
  Weight detr = normalize(field, r, std::vector<long>(static_cast<size_t>(field.f), 0));
  rhs += VirtualRep::basis(field, detr);
  if (!leq(lhs, rhs)) {
    fail(ErrorCode::AssertionFailed,
         "[S_n] <= [S_{n+p-1} + det^r] failed at n = " + std::to_string(n));
  }
  return {true, r};
}

bool check_hasse_fq(const GrothendieckRing& ring, long i, long m, long n) {
  const BaseField& field = ring.field();
  require(field.f > 1, "hasse_fq needs f > 1");
  require(m >= 0 && n * field.p > m, "hasse_fq needs n p > m >= 0");
  VirtualRep lhs = ring.straighten(pair_at(field, 0, i, m, n));
  VirtualRep rhs = ring.straighten(pair_at(field, 0, i, m + field.p, n - 1));
  return leq(lhs, rhs);
}

bool check_dickson_fp(const GrothendieckRing& ring, long k) {
  const BaseField& field = ring.field();
  require(field.f == 1, "dickson_fp needs f = 1");
  require(k >= 0, "dickson_fp needs k >= 0");
  VirtualRep lhs = ring.straighten(single(field, 0, 0, k));
  VirtualRep rhs = ring.straighten(single(field, 0, 0, k + field.p * (field.p - 1)));
  return leq(lhs, rhs);
}

std::pair<long long, VirtualRep> apply_bigtheta(const GrothendieckRing& ring,
                                                const VirtualRep& x,
                                                const std::vector<long>& b) {
  const BaseField& field = ring.field();
  require(field.f > 1, "bigtheta needs f > 1");
  require(static_cast<int>(b.size()) == field.f, "b must have one entry per embedding");
  long long twist = 0;
  for (int i = 0; i < field.f; ++i) {
    require(b[i] >= 0, "bigtheta needs b_i >= 0");
    twist -= static_cast<long long>(b[i]) * field.ppow[i];
  }
  VirtualRep target(field);
  for (const auto& [w, c] : x.terms()) {
    SymProduct sp;
    sp.det_exp = w.a;
    sp.m.resize(static_cast<size_t>(field.f));
    for (int i = 0; i < field.f; ++i) {
      sp.m[i] = w.n[i] + b[i] + field.p * b[static_cast<size_t>(field.emb(i + 1))];
    }
    target += ring.straighten(sp).scaled(c);
  }
  return {twist, target};
}

SystemSolution solve_system(const BaseField& field, const std::vector<long>& nprime) {
  const long p = field.p;
  const int f = field.f;
  if (static_cast<int>(nprime.size()) != f) {
    fail(ErrorCode::BadInput, "n' must have one entry per embedding");
  }
  for (long v : nprime) require(v >= 0, "n' entries must be >= 0");

  long trace = 0;
  for (long pp : field.ppow) trace += pp;
  std::vector<long long> m(static_cast<size_t>(f), 0);
  for (int j = 0; j < f; ++j) {
    for (int i = 0; i < f; ++i) {
      m[j] += static_cast<long long>(nprime[static_cast<size_t>(field.emb(i + j))]) * field.ppow[i];
    }
    if (m[j] % trace != 0) {
      fail(ErrorCode::DivisibilityFailed,
           "sum n'_{i+j} p^i not divisible by sum p^i at j = " + std::to_string(j) +
               " (central character mismatch upstream)");
    }
  }

  // x_j = x_{j-1} - n'_{j-1} + m_j / trace, x_0 minimal with all x_j >= 0
  std::vector<long> y(static_cast<size_t>(f), 0);
  for (int j = 1; j < f; ++j) {
    y[j] = y[j - 1] - nprime[j - 1] + static_cast<long>(m[j] / trace);
  }
  long x0 = 0;
  for (long v : y) x0 = std::max(x0, -v);
  std::vector<long> x(static_cast<size_t>(f));
  for (int j = 0; j < f; ++j) x[j] = x0 + y[j];

  // r minimal with r (p-1)(p^2-1) > n'_i - p n'_{i+1} + 2 p x_{i+1} for all i
  const long long K = static_cast<long long>(p - 1) * (p * p - 1);
  long r = 0;
  for (int i = 0; i < f; ++i) {
    long long rhs = nprime[i] - p * nprime[static_cast<size_t>(field.emb(i + 1))] +
                    2 * p * static_cast<long long>(x[static_cast<size_t>(field.emb(i + 1))]);
    if (rhs >= 0) r = std::max(r, static_cast<long>(rhs / K) + 1);
  }

  SystemSolution sol;
  sol.nprime = nprime;
  sol.x = x;
  sol.r = r;
  sol.t = nprime[0] + r * (p * p - 1) - x[0] + p * x[static_cast<size_t>(field.emb(1))];
  for (int i = 0; i < f; ++i) {
    long ti = nprime[i] + r * (p * p - 1) - x[i] + p * x[static_cast<size_t>(field.emb(i + 1))];
    if (ti != sol.t) fail(ErrorCode::AssertionFailed, "system values not all equal");
  }
  return sol;
}

namespace {

// Chain builder: tracks the current det^w (x) S_m state and records steps.
struct ChainBuilder {
  const BaseField& field;
  ShiftCertificate cert;
  SymProduct state;

  ChainBuilder(const BaseField& fld, const Weight& sigma) : field(fld) {
    state.det_exp = sigma.a;
    state.m.assign(sigma.n.begin(), sigma.n.end());
    cert.field = fld;
    cert.sigma = sigma;
    cert.intermediates.push_back(state);
  }

  void apply(const ShiftStep& step) {
    switch (step.kind) {
      case StepKind::ThetaFp:
        state.det_exp = field.reduce_det(state.det_exp - 1);
        state.m[0] += field.p + 1;
        break;
      case StepKind::ThetaFq: {
        long long tw = 0;
        std::vector<long> next(state.m.size());
        for (int i = 0; i < field.f; ++i) {
          tw += static_cast<long long>(step.b[i]) * field.ppow[i];
          next[i] = state.m[i] + step.b[i] +
                    field.p * step.b[static_cast<size_t>(field.emb(i + 1))];
        }
        state.det_exp = field.reduce_det(state.det_exp - tw);
        state.m = std::move(next);
        break;
      }
      case StepKind::HasseFp:
        state.m[0] += field.p - 1;
        break;
      case StepKind::HasseFq:
        state.m[static_cast<size_t>(step.i)] += field.p;
        state.m[static_cast<size_t>(field.emb(step.i + 1))] -= 1;
        break;
      case StepKind::DicksonFp:
        state.m[0] += field.p * (field.p - 1);
        break;
      case StepKind::TensorSurjection:
        // no post-state; the chain ends here
        cert.steps.push_back(step);
        return;
    }
    cert.steps.push_back(step);
    cert.intermediates.push_back(state);
  }

  long parallel_value() const { return state.m[0]; }
};

// Theta/system phase of the e = 1 construction; ends at a parallel state
// (det = 0, m = (u, ..., u)).
void build_e1_chain(const GrothendieckRing& ring, ChainBuilder& chain) {
  const BaseField& field = ring.field();
  const long p = field.p;
  const Weight& sigma = chain.cert.sigma;

  if (field.f == 1) {
    long aa = sigma.a;
    const long nn = sigma.n[0];
    if (nn == 0) aa += p - 1;  // ensures t_0 = a(p+1) >= p^2 - 1
    for (long jj = 0; jj < aa; ++jj) chain.apply({StepKind::ThetaFp});
    if (nn == 0) {
      // exceptional Hasse step past t_0 = r(p+1); valid since
      // 2[det^r] <= [S_{t_0}] once r >= p-1
      chain.apply({StepKind::HasseFp});
    }
    return;
  }

  // f > 1: shift away the det twist by its base-p digits
  std::vector<long> b(static_cast<size_t>(field.f), 0);
  long a = sigma.a;
  for (int i = 0; i < field.f; ++i) {
    b[i] = a % p;
    a /= p;
  }
  if (std::any_of(b.begin(), b.end(), [](long v) { return v > 0; })) {
    ShiftStep step{StepKind::ThetaFq};
    step.b = b;
    chain.apply(step);
  }

  std::vector<long> nprime(chain.state.m.begin(), chain.state.m.end());
  SystemSolution sol = solve_system(field, nprime);
  if (sol.r > 0) {
    ShiftStep step{StepKind::ThetaFq};
    step.b.assign(static_cast<size_t>(field.f), sol.r * (p - 1));
    chain.apply(step);
  }
  for (int i = 0; i < field.f; ++i) {
    const long count = sol.x[static_cast<size_t>(field.emb(i + 1))];
    for (long c = 0; c < count; ++c) {
      ShiftStep step{StepKind::HasseFq};
      step.i = i;
      chain.apply(step);
    }
  }
}

// raises a parallel state (u, ..., u) to (target, ..., target) by Hasse steps
void extend_parallel(ChainBuilder& chain, long target) {
  const BaseField& field = chain.field;
  while (chain.parallel_value() < target) {
    if (field.f == 1) {
      chain.apply({StepKind::HasseFp});
    } else {
      for (int i = field.f - 1; i >= 0; --i) {
        ShiftStep step{StepKind::HasseFq};
        step.i = i;
        chain.apply(step);
      }
    }
  }
}

}  // namespace

ShiftCertificate dominate_parallel_weight(const GrothendieckRing& ring, const Weight& sigma,
                                          long e, const DominateOptions& opts) {
  const BaseField& field = ring.field();
  require(e >= 1, "e must be >= 1");
  if (!is_valid_weight(field, sigma)) {
    fail(ErrorCode::OutOfRangeExponent, "sigma is not a normalized basis weight");
  }
  auto s = norm_power_form(field, sigma, e);
  if (!s) {
    fail(ErrorCode::NoNormPowerForm,
         "central character of sigma is not a norm power for e = " + std::to_string(e));
  }
  const long period = congruence_period(field, e);

  ChainBuilder chain(field, sigma);
  chain.cert.e = e;
  chain.cert.s = *s;
  build_e1_chain(ring, chain);
  const long u0 = chain.parallel_value();

  long t;
  if (e == 1) {
    t = u0;
    if (opts.min_t > t) {
      long extra = opts.min_t - t;
      long rounds = (extra + period - 1) / period;
      t += rounds * period;
    }
    // period divides p-1, so parallel Hasse rounds can realize the target
    long steps_needed = (t - u0) / (field.p - 1);
    extend_parallel(chain, u0 + steps_needed * (field.p - 1));
    t = chain.parallel_value();
  } else {
    // smallest t == s mod period with e t >= u0 (and >= min_t)
    long lo = (u0 + e - 1) / e;
    if (opts.min_t > lo) lo = opts.min_t;
    t = *s % period;
    if (t < lo) t += ((lo - t + period - 1) / period) * period;
    extend_parallel(chain, e * t);
    ShiftStep step{StepKind::TensorSurjection};
    step.e = e;
    chain.apply(step);
  }
  chain.cert.t = t;
  return chain.cert;
}

namespace {

struct ReplayState {
  SymProduct state;
  bool after_surjection = false;
};

std::string fmt_state(const SymProduct& sp) {
  std::string s = "det^" + std::to_string(sp.det_exp) + " * Sym(";
  for (size_t i = 0; i < sp.m.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(sp.m[i]);
  }
  return s + ")";
}

}  // namespace

ReplayReport replay_certificate(const GrothendieckRing& ring, const ShiftCertificate& cert) {
  const BaseField& field = ring.field();
  auto failed = [](std::size_t idx, std::string reason) {
    return ReplayReport{false, idx, std::move(reason)};
  };
  const std::size_t kPre = static_cast<std::size_t>(-1);

  if (cert.field != field) return failed(kPre, "certificate field mismatch");
  if (!is_valid_weight(field, cert.sigma)) return failed(kPre, "sigma not a basis weight");
  if (cert.e < 1) return failed(kPre, "e must be >= 1");
  if (cert.t < 0) return failed(kPre, "t must be >= 0");

  auto s = norm_power_form(field, cert.sigma, cert.e);
  if (!s) return failed(kPre, "sigma has no norm-power central character");
  if (*s != cert.s) return failed(kPre, "stored s does not match the central character");
  const long period = congruence_period(field, cert.e);
  if ((cert.t - *s) % period != 0) return failed(kPre, "t not congruent to s");

  const VirtualRep sigma_rep = VirtualRep::basis(field, cert.sigma);
  SymProduct state;
  state.det_exp = cert.sigma.a;
  state.m.assign(cert.sigma.n.begin(), cert.sigma.n.end());
  if (!cert.intermediates.empty() && !(cert.intermediates[0] == state)) {
    return failed(kPre, "stored initial state differs from sigma");
  }

  bool saw_surjection = false;
  size_t inter_idx = 1;
  for (size_t idx = 0; idx < cert.steps.size(); ++idx) {
    const ShiftStep& step = cert.steps[idx];
    if (saw_surjection) return failed(idx, "step after TensorSurjection");

    SymProduct next = state;
    VirtualRep source = ring.straighten(state);
    switch (step.kind) {
      case StepKind::ThetaFp: {
        if (field.f != 1) return failed(idx, "ThetaFp needs f = 1");
        next.det_exp = field.reduce_det(state.det_exp - 1);
        next.m[0] += field.p + 1;
        if (!leq(source, ring.straighten(next))) return failed(idx, "theta inequality fails");
        break;
      }
      case StepKind::ThetaFq: {
        if (field.f < 2) return failed(idx, "ThetaFq needs f > 1");
        if (static_cast<int>(step.b.size()) != field.f) return failed(idx, "bad b vector");
        long long tw = 0;
        for (int i = 0; i < field.f; ++i) {
          if (step.b[i] < 0) return failed(idx, "b entries must be >= 0");
          tw += static_cast<long long>(step.b[i]) * field.ppow[i];
          next.m[i] = state.m[i] + step.b[i] +
                      field.p * step.b[static_cast<size_t>(field.emb(i + 1))];
        }
        next.det_exp = field.reduce_det(state.det_exp - tw);
        if (!leq(source, ring.straighten(next))) return failed(idx, "bigtheta inequality fails");
        break;
      }
      case StepKind::HasseFp: {
        if (field.f != 1) return failed(idx, "HasseFp needs f = 1");
        const long p = field.p;
        const long m0 = state.m[0];
        next.m[0] += p - 1;
        VirtualRep target = ring.straighten(next);
        if (m0 % (p + 1) != 0) {
          if (!leq(source, target)) return failed(idx, "Hasse inequality fails");
        } else {
          const long r = m0 / (p + 1);
          Weight detr = normalize(field, state.det_exp + r,
                                  std::vector<long>(static_cast<size_t>(field.f), 0));
          if (detr == cert.sigma) {
            // escape: 2[sigma] <= source and source <= target + [sigma]
            // together give [sigma] <= target
            if (!leq(sigma_rep.scaled(2), source)) {
              return failed(idx, "exceptional Hasse step: sigma not twice-contained at " +
                                     fmt_state(state));
            }
            if (!leq(source, target + sigma_rep)) {
              return failed(idx, "exceptional Hasse inequality fails");
            }
          } else {
            if (!leq(source, target + VirtualRep::basis(field, detr))) {
              return failed(idx, "exceptional Hasse inequality fails");
            }
          }
        }
        break;
      }
      case StepKind::HasseFq: {
        if (field.f < 2) return failed(idx, "HasseFq needs f > 1");
        if (step.i < 0 || step.i >= field.f) return failed(idx, "bad embedding index");
        next.m[static_cast<size_t>(step.i)] += field.p;
        next.m[static_cast<size_t>(field.emb(step.i + 1))] -= 1;
        if (!leq(source, ring.straighten(next))) return failed(idx, "Hasse inequality fails");
        break;
      }
      case StepKind::DicksonFp: {
        if (field.f != 1) return failed(idx, "DicksonFp needs f = 1");
        next.m[0] += field.p * (field.p - 1);
        if (!leq(source, ring.straighten(next))) return failed(idx, "Dickson inequality fails");
        break;
      }
      case StepKind::TensorSurjection: {
        if (step.e != cert.e || cert.e < 2) return failed(idx, "surjection exponent mismatch");
        if (!leq(source, ring.parallel_power(cert.t, cert.e))) {
          return failed(idx, "surjection inequality fails");
        }
        saw_surjection = true;
        break;
      }
    }
    if (step.kind != StepKind::TensorSurjection) {
      state = next;
      if (inter_idx < cert.intermediates.size() && !(cert.intermediates[inter_idx] == state)) {
        return failed(idx, "stored intermediate differs from the replayed state");
      }
      ++inter_idx;
    }
  }

  if (cert.e > 1 && !saw_surjection) {
    return failed(cert.steps.size(), "e > 1 certificate lacks a TensorSurjection step");
  }

  // final claim, checked directly against the expanded parallel power
  if (!leq(sigma_rep, ring.parallel_power(cert.t, cert.e))) {
    return failed(cert.steps.size(), "final claim [sigma] <= [S_(t,...,t)^e] fails");
  }
  return ReplayReport{true, static_cast<std::size_t>(-1), ""};
}

std::vector<long> brute_force_min_t(const GrothendieckRing& ring, const Weight& sigma,
                                    long e, long t_max) {
  const BaseField& field = ring.field();
  require(e >= 1, "e must be >= 1");
  auto s = norm_power_form(field, sigma, e);
  if (!s) {
    fail(ErrorCode::NoNormPowerForm,
         "central character of sigma is not a norm power for e = " + std::to_string(e));
  }
  const long period = congruence_period(field, e);
  const VirtualRep sigma_rep = VirtualRep::basis(field, sigma);
  std::vector<long> out;
  for (long t = *s % period; t <= t_max; t += period) {
    if (leq(sigma_rep, ring.parallel_power(t, e))) out.push_back(t);
  }
  return out;
}

}  // namespace gl2groth
