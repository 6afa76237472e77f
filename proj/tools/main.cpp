// Batch CLI for exact Grothendieck-group computations for GL_2(F_q) mod p:
// symmetric-power decompositions, weight-shifting lemma sweeps, domination
// certificates and the lift-weight schedule.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <unistd.h>

#include "gl2groth/brauer.hpp"
#include "gl2groth/errors.hpp"
#include "gl2groth/json_io.hpp"
#include "gl2groth/serre.hpp"
#include "gl2groth/shift.hpp"

namespace {

using nlohmann::json;
using namespace gl2groth;

struct Output {
  bool want_json = false;
  std::string out_file;

  bool json_mode() const { return want_json || isatty(fileno(stdout)) == 0; }

  void emit(const json& j, const std::string& human) const {
    if (!out_file.empty()) {
      std::ofstream os(out_file);
      if (!os) fail(ErrorCode::BadInput, "cannot write " + out_file);
      os << j.dump(2) << "\n";
    }
    if (json_mode()) {
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << human;
    }
  }
};

json load_json(const std::string& path) {
  std::ifstream is(path);
  if (!is) fail(ErrorCode::BadInput, "cannot read " + path);
  json j;
  try {
    is >> j;
  } catch (const json::parse_error& e) {
    fail(ErrorCode::BadInput, path + ": " + e.what());
  }
  return j;
}

std::string weight_str(const Weight& w) {
  std::string s = "det^" + std::to_string(w.a) + " S(";
  for (size_t i = 0; i < w.n.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w.n[i]);
  }
  return s + ")";
}

std::string rep_table(const VirtualRep& x) {
  std::ostringstream os;
  os << "mult  weight\n";
  for (const auto& [w, c] : x.terms()) {
    os << std::setw(4) << c << "  " << weight_str(w) << "\n";
  }
  if (x.is_zero()) os << "  (zero)\n";
  os << "dimension: " << x.dimension() << "\n";
  return os.str();
}

std::vector<PlaceData> parse_places(const std::string& spec) {
  std::vector<PlaceData> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos) fail(ErrorCode::BadInput, "places must be e:f[,e:f...]");
    out.push_back({std::stol(item.substr(0, colon)),
                   static_cast<int>(std::stol(item.substr(colon + 1)))});
  }
  if (out.empty()) fail(ErrorCode::BadInput, "places must be e:f[,e:f...]");
  return out;
}

// ---- subcommand state ----

struct DecomposeArgs {
  long p = 0;
  int f = 1;
  long long a = 0;
  std::vector<long> m;
  long sym = 0;
  bool has_sym = false;
};

struct WeightArgs {
  long p = 0;
  int f = 1;
  long long a = 0;
  std::vector<long> n;
  long e = 1;
};

int run_decompose(const DecomposeArgs& args, const Output& out) {
  BaseField field = BaseField::make(args.p, args.f);
  SymProduct sp;
  sp.det_exp = args.a;
  if (args.has_sym) {
    sp.m.assign(static_cast<size_t>(args.f), 0);
    sp.m[0] = args.sym;
  } else {
    sp.m = args.m;
  }
  GrothendieckRing ring(field);
  VirtualRep x = ring.straighten(sp);
  out.emit(virtual_rep_to_json(x), rep_table(x));
  return 0;
}

int run_tensor(const std::string& fx, const std::string& fy, const Output& out) {
  VirtualRep x = virtual_rep_from_json(load_json(fx));
  VirtualRep y = virtual_rep_from_json(load_json(fy));
  if (x.field() != y.field()) fail(ErrorCode::FieldMismatch, "operands over different fields");
  GrothendieckRing ring(x.field());
  VirtualRep r = ring.tensor(x, y);
  out.emit(virtual_rep_to_json(r), rep_table(r));
  return 0;
}

int run_check_leq(const std::string& fx, const std::string& fy, const Output& out) {
  VirtualRep x = virtual_rep_from_json(load_json(fx));
  VirtualRep y = virtual_rep_from_json(load_json(fy));
  bool r = leq(x, y);
  out.emit(json{{"leq", r}}, std::string(r ? "true" : "false") + "\n");
  return 0;
}

struct LemmaArgs {
  long p = 0;
  int f = 0;
  bool sweep = false;
  long max_n = 30;
  long max_q = 27;
  bool inject_fault = false;
  unsigned long seed = 0;
};

int run_verify_lemmas(const LemmaArgs& args, const Output& out) {
  std::vector<std::pair<long, int>> fields;
  if (args.sweep) {
    for (long p : {2L, 3L, 5L}) {
      for (int f : {1, 2, 3}) {
        long q = 1;
        for (int i = 0; i < f; ++i) q *= p;
        if (q <= args.max_q) fields.push_back({p, f});
      }
    }
  } else {
    if (args.p == 0 || args.f == 0) {
      fail(ErrorCode::BadInput, "give --p and --f, or --sweep");
    }
    fields.push_back({args.p, args.f});
  }

  long checks = 0, failures = 0;
  json details = json::array();
  std::ostringstream human;
  for (auto [p, f] : fields) {
    GrothendieckRing ring(BaseField::make(p, f));
    long local_checks = 0, local_failures = 0;
    auto record = [&](const char* lemma, bool ok, long i, long m, long n) {
      ++checks;
      ++local_checks;
      if (!ok) {
        ++failures;
        ++local_failures;
        details.push_back(json{{"p", p}, {"f", f}, {"lemma", lemma},
                               {"i", i}, {"m", m}, {"n", n}});
      }
    };
    if (f == 1) {
      for (long n = 0; n <= args.max_n; ++n) {
        record("theta_fp", check_theta_fp(ring, n), 0, 0, n);
        record("hasse_fp", (check_hasse_fp(ring, n), true), 0, 0, n);
        record("dickson_fp", check_dickson_fp(ring, n), 0, 0, n);
      }
    } else {
      for (long i = 0; i < f; ++i) {
        for (long m = 0; m <= args.max_n; ++m) {
          for (long n = 0; n <= args.max_n; ++n) {
            record("theta_fq", check_theta_fq(ring, i, m, n), i, m, n);
            if (n * p > m) record("hasse_fq", check_hasse_fq(ring, i, m, n), i, m, n);
          }
        }
      }
    }
    human << "p=" << p << " f=" << f << ": " << local_checks << " checks, "
          << local_failures << " failures\n";
  }

  if (args.inject_fault) {
    // deliberately false domination claim; the harness must report it
    std::mt19937_64 rng(args.seed);
    auto [p, f] = fields[rng() % fields.size()];
    long n = static_cast<long>(rng() % static_cast<unsigned long>(args.max_n + 1));
    GrothendieckRing ring(BaseField::make(p, f));
    SymProduct bigger, smaller;
    bigger.m.assign(static_cast<size_t>(f), 0);
    smaller.m.assign(static_cast<size_t>(f), 0);
    bigger.m[0] = n + 1;
    smaller.m[0] = n;
    ++checks;
    bool ok = leq(ring.straighten(bigger), ring.straighten(smaller));
    if (!ok) {
      ++failures;
      details.push_back(json{{"p", p}, {"f", f}, {"lemma", "injected-fault"},
                             {"i", 0}, {"m", n + 1}, {"n", n}});
      human << "injected fault at p=" << p << " f=" << f << " n=" << n << ": caught\n";
    }
  }

  human << checks << " checks, " << failures << " failures\n";
  out.emit(json{{"checks", checks}, {"failures", failures}, {"details", details}},
           human.str());
  return failures == 0 ? 0 : 1;
}

int run_dominate(const WeightArgs& args, long min_t, const Output& out) {
  BaseField field = BaseField::make(args.p, args.f);
  Weight sigma = normalize(field, args.a, args.n);
  GrothendieckRing ring(field);
  DominateOptions opts;
  opts.min_t = min_t;
  ShiftCertificate cert = dominate_parallel_weight(ring, sigma, args.e, opts);
  ReplayReport rep = replay_certificate(ring, cert);
  std::ostringstream human;
  human << "sigma = " << weight_str(sigma) << ", e = " << cert.e << "\n"
        << "t = " << cert.t << " (s = " << cert.s << ", period = "
        << congruence_period(field, cert.e) << "), steps = " << cert.steps.size() << "\n"
        << "replay: " << (rep.ok ? "ok" : ("FAILED: " + rep.reason)) << "\n";
  json j = certificate_to_json(cert);
  j["replay_ok"] = rep.ok;
  out.emit(j, human.str());
  return rep.ok ? 0 : 1;
}

int run_replay(const std::string& file, const Output& out) {
  ShiftCertificate cert = certificate_from_json(load_json(file));
  GrothendieckRing ring(cert.field);
  ReplayReport rep = replay_certificate(ring, cert);
  json j{{"valid", rep.ok}};
  std::ostringstream human;
  if (rep.ok) {
    human << "valid: [" << weight_str(cert.sigma) << "] <= [S_(t,...,t)^e], t = "
          << cert.t << ", e = " << cert.e << "\n";
  } else {
    j["failed_step"] = rep.failed_step == static_cast<size_t>(-1)
                           ? json(nullptr)
                           : json(rep.failed_step);
    j["reason"] = rep.reason;
    human << "INVALID: " << rep.reason;
    if (rep.failed_step != static_cast<size_t>(-1)) {
      human << " (step " << rep.failed_step << ")";
    }
    human << "\n";
  }
  out.emit(j, human.str());
  return rep.ok ? 0 : 1;
}

int run_brute_force(const WeightArgs& args, long t_max, const Output& out) {
  BaseField field = BaseField::make(args.p, args.f);
  Weight sigma = normalize(field, args.a, args.n);
  GrothendieckRing ring(field);
  std::vector<long> ts = brute_force_min_t(ring, sigma, args.e, t_max);
  std::ostringstream human;
  human << "admissible t <= " << t_max << " for " << weight_str(sigma)
        << ", e = " << args.e << ":\n ";
  for (long t : ts) human << " " << t;
  human << "\n";
  out.emit(json{{"p", args.p}, {"f", args.f}, {"sigma", weight_to_json(sigma)},
                {"e", args.e}, {"t_max", t_max}, {"admissible", ts}},
           human.str());
  return 0;
}

int run_brauer_table(long p, int f, long max_q, const Output& out) {
  BrauerTable table(BaseField::make(p, f), max_q);
  if (!out.out_file.empty() && out.out_file.size() > 4 &&
      out.out_file.substr(out.out_file.size() - 4) == ".csv") {
    std::ofstream os(out.out_file);
    if (!os) fail(ErrorCode::BadInput, "cannot write " + out.out_file);
    os << brauer_table_to_csv(table);
    std::cout << "wrote " << out.out_file << "\n";
    return 0;
  }
  std::ostringstream human;
  human << "q = " << table.field().q << ", " << table.classes().size()
        << " p-regular classes, root order " << table.modulus() << "\n";
  human << brauer_table_to_csv(table);
  out.emit(brauer_table_to_json(table), human.str());
  return 0;
}

struct LiftArgs {
  std::string input;
  long p = 0;
  long k = 0;
  std::string places;
  std::string weights_file;
  long t_max = 200;
};

int run_lift_weight(const LiftArgs& args, const Output& out) {
  RamificationProfile profile;
  std::vector<std::vector<Weight>> weights;
  if (!args.input.empty()) {
    json j = load_json(args.input);
    profile = profile_from_json(j);
    if (j.contains("weights")) {
      weights.resize(profile.places.size());
      for (const auto& wj : j["weights"]) {
        size_t place = wj.value("place", 0);
        if (place >= profile.places.size()) fail(ErrorCode::BadInput, "bad place index");
        BaseField kv = BaseField::make(profile.p, profile.places[place].f);
        weights[place].push_back(weight_from_json(kv, wj));
      }
    }
  } else {
    if (args.p == 0 || args.k == 0 || args.places.empty()) {
      fail(ErrorCode::BadInput, "give INPUT.json, or --p, --k and --places");
    }
    profile.p = args.p;
    profile.k = args.k;
    profile.places = parse_places(args.places);
  }
  if (!args.weights_file.empty()) {
    json j = load_json(args.weights_file);
    const json& arr = j.is_array() ? j : j.at("weights");
    weights.assign(profile.places.size(), {});
    for (const auto& wj : arr) {
      size_t place = wj.value("place", 0);
      if (place >= profile.places.size()) fail(ErrorCode::BadInput, "bad place index");
      BaseField kv = BaseField::make(profile.p, profile.places[place].f);
      weights[place].push_back(weight_from_json(kv, wj));
    }
  }

  LiftWeightSchedule sched = lift_weight_schedule(profile, weights, args.t_max);
  std::ostringstream human;
  human << "delta = " << sched.delta << ", n0 = " << sched.n0 << "\n";
  for (size_t i = 0; i < sched.sample_weights.size(); ++i) {
    long n = sched.n0 + static_cast<long>(i);
    human << "  n = " << n << ": weight k+n*delta = " << sched.sample_weights[i]
          << ", Sym exponent = " << sched.k - 2 + n * sched.delta << "\n";
  }
  for (size_t v = 0; v < sched.places.size(); ++v) {
    human << "place " << v << " (e=" << sched.places[v].place.e
          << ", f=" << sched.places[v].place.f << "): "
          << sched.places[v].weights.size() << " weights, certificates replayed\n";
  }
  out.emit(schedule_to_json(sched), human.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace gl2groth;
  CLI::App app{"exact Grothendieck-group computations for GL2(F_q) in characteristic p"};
  app.require_subcommand(1);
  app.fallthrough();

  Output out;
  app.add_flag("--json", out.want_json, "emit JSON instead of tables");
  app.add_option("--out", out.out_file, "also write the JSON result to FILE");

  DecomposeArgs dec;
  auto* cmd_dec = app.add_subcommand("decompose", "straighten det^a * prod Sym^{m_i}_{[i]}");
  cmd_dec->add_option("--p", dec.p, "characteristic")->required();
  cmd_dec->add_option("--f", dec.f, "degree of F_q over F_p");
  cmd_dec->add_option("--a", dec.a, "determinant exponent");
  auto* sym_opt = cmd_dec->add_option("--sym", dec.sym, "Sym exponent at embedding 0");
  cmd_dec->add_option("--n", dec.m, "comma list of Sym exponents per embedding")
      ->delimiter(',');

  std::string file_x, file_y;
  auto* cmd_tensor = app.add_subcommand("tensor", "product of two virtual reps (JSON files)");
  cmd_tensor->add_option("x", file_x, "first operand")->required();
  cmd_tensor->add_option("y", file_y, "second operand")->required();

  auto* cmd_leq = app.add_subcommand("check-leq", "is x <= y in the natural partial order?");
  cmd_leq->add_option("x", file_x, "left side")->required();
  cmd_leq->add_option("y", file_y, "right side")->required();

  LemmaArgs lem;
  auto* cmd_lem = app.add_subcommand("verify-lemmas", "sweep the weight-shifting inequalities");
  cmd_lem->add_option("--p", lem.p, "characteristic");
  cmd_lem->add_option("--f", lem.f, "degree");
  cmd_lem->add_flag("--sweep", lem.sweep, "sweep p in {2,3,5}, f in {1,2,3} up to --max-q");
  cmd_lem->add_option("--max-n", lem.max_n, "exponent bound (default 30)");
  cmd_lem->add_option("--max-q", lem.max_q, "field size bound (default 27)");
  cmd_lem->add_flag("--inject-fault", lem.inject_fault,
                    "add one deliberately false claim (exit nonzero)");
  cmd_lem->add_option("--seed", lem.seed, "seed for the injected fault");

  WeightArgs warg;
  long min_t = -1;
  auto* cmd_dom = app.add_subcommand("dominate", "emit a domination certificate for sigma");
  cmd_dom->add_option("--p", warg.p, "characteristic")->required();
  cmd_dom->add_option("--f", warg.f, "degree");
  cmd_dom->add_option("--a", warg.a, "determinant exponent of sigma");
  cmd_dom->add_option("--n", warg.n, "Sym exponents of sigma")->delimiter(',')->required();
  cmd_dom->add_option("--e", warg.e, "tensor exponent e");
  cmd_dom->add_option("--min-t", min_t, "extend the chain so that t >= min-t");

  std::string cert_file;
  auto* cmd_replay = app.add_subcommand("replay", "verify a certificate file");
  cmd_replay->add_option("cert", cert_file, "certificate JSON")->required();

  long t_max = 200;
  auto* cmd_bf = app.add_subcommand("brute-force-t", "all admissible t up to --t-max");
  cmd_bf->add_option("--p", warg.p, "characteristic")->required();
  cmd_bf->add_option("--f", warg.f, "degree");
  cmd_bf->add_option("--a", warg.a, "determinant exponent of sigma");
  cmd_bf->add_option("--n", warg.n, "Sym exponents of sigma")->delimiter(',')->required();
  cmd_bf->add_option("--e", warg.e, "tensor exponent e");
  cmd_bf->add_option("--t-max", t_max, "search bound (default 200)");

  long bt_p = 0;
  int bt_f = 1;
  long bt_max_q = kDefaultMaxQ;
  auto* cmd_bt = app.add_subcommand("brauer-table", "export the Brauer character table");
  cmd_bt->add_option("--p", bt_p, "characteristic")->required();
  cmd_bt->add_option("--f", bt_f, "degree");
  cmd_bt->add_option("--max-q", bt_max_q, "oracle size bound (default 27)");

  LiftArgs lift;
  auto* cmd_lift = app.add_subcommand("lift-weight", "delta, n0 and the k+n*delta schedule");
  cmd_lift->add_option("input", lift.input, "profile JSON ({p,k,places[,weights]})");
  cmd_lift->add_option("--p", lift.p, "characteristic");
  cmd_lift->add_option("--k", lift.k, "target parallel weight k >= 2");
  cmd_lift->add_option("--places", lift.places, "places as e:f[,e:f...]");
  cmd_lift->add_option("--weights", lift.weights_file, "JSON list of target weights");
  cmd_lift->add_option("--t-max", lift.t_max, "Sym exponent bound (default 200)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_dec->parsed()) {
      dec.has_sym = sym_opt->count() > 0;
      if (!dec.has_sym && dec.m.empty()) {
        fail(ErrorCode::BadInput, "give --sym or --n");
      }
      if (!dec.has_sym && static_cast<int>(dec.m.size()) != dec.f) {
        fail(ErrorCode::BadInput, "--n needs one entry per embedding");
      }
      return run_decompose(dec, out);
    }
    if (cmd_tensor->parsed()) return run_tensor(file_x, file_y, out);
    if (cmd_leq->parsed()) return run_check_leq(file_x, file_y, out);
    if (cmd_lem->parsed()) return run_verify_lemmas(lem, out);
    if (cmd_dom->parsed()) return run_dominate(warg, min_t, out);
    if (cmd_replay->parsed()) return run_replay(cert_file, out);
    if (cmd_bf->parsed()) return run_brute_force(warg, t_max, out);
    if (cmd_bt->parsed()) return run_brauer_table(bt_p, bt_f, bt_max_q, out);
    if (cmd_lift->parsed()) return run_lift_weight(lift, out);
  } catch (const DomainError& e) {
    json err{{"error", {{"code", to_string(e.code())}, {"message", e.what()}}}};
    if (out.json_mode()) std::cout << err.dump(2) << "\n";
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
