#include "gl2groth/json_io.hpp"

#include <sstream>

#include "gl2groth/errors.hpp"

namespace gl2groth {

using nlohmann::json;

namespace {

const json& need(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) fail(ErrorCode::BadInput, std::string("missing JSON key '") + key + "'");
  return *it;
}

BaseField field_from_json(const json& j) {
  return BaseField::make(need(j, "p").get<long>(), need(j, "f").get<int>());
}

}  // namespace

json weight_to_json(const Weight& w) {
  return json{{"a", w.a}, {"n", w.n}};
}

Weight weight_from_json(const BaseField& field, const json& j) {
  std::vector<long> n = need(j, "n").get<std::vector<long>>();
  return normalize(field, need(j, "a").get<long long>(), n);
}

json virtual_rep_to_json(const VirtualRep& x) {
  json terms = json::array();
  for (const auto& [w, c] : x.terms()) {
    json t = weight_to_json(w);
    t["mult"] = c;
    terms.push_back(std::move(t));
  }
  return json{{"p", x.field().p}, {"f", x.field().f}, {"terms", std::move(terms)}};
}

VirtualRep virtual_rep_from_json(const json& j) {
  BaseField field = field_from_json(j);
  VirtualRep x(field);
  for (const auto& t : need(j, "terms")) {
    x.add_term(weight_from_json(field, t), need(t, "mult").get<long long>());
  }
  return x;
}

json sym_product_to_json(const SymProduct& sp) {
  return json{{"det", sp.det_exp}, {"m", sp.m}};
}

SymProduct sym_product_from_json(const json& j) {
  SymProduct sp;
  sp.det_exp = need(j, "det").get<long long>();
  sp.m = need(j, "m").get<std::vector<long>>();
  return sp;
}

json step_to_json(const ShiftStep& s) {
  json j{{"kind", to_string(s.kind)}};
  switch (s.kind) {
    case StepKind::ThetaFq: j["b"] = s.b; break;
    case StepKind::HasseFq: j["i"] = s.i; break;
    case StepKind::TensorSurjection: j["e"] = s.e; break;
    default: break;
  }
  return j;
}

ShiftStep step_from_json(const json& j) {
  auto kind = step_kind_from_string(need(j, "kind").get<std::string>());
  if (!kind) fail(ErrorCode::BadInput, "unknown step kind");
  ShiftStep s;
  s.kind = *kind;
  switch (*kind) {
    case StepKind::ThetaFq: s.b = need(j, "b").get<std::vector<long>>(); break;
    case StepKind::HasseFq: s.i = need(j, "i").get<int>(); break;
    case StepKind::TensorSurjection: s.e = need(j, "e").get<long>(); break;
    default: break;
  }
  return s;
}

json certificate_to_json(const ShiftCertificate& cert) {
  json steps = json::array();
  for (const auto& s : cert.steps) steps.push_back(step_to_json(s));
  json inter = json::array();
  for (const auto& sp : cert.intermediates) inter.push_back(sym_product_to_json(sp));
  return json{{"p", cert.field.p},
              {"f", cert.field.f},
              {"sigma", weight_to_json(cert.sigma)},
              {"e", cert.e},
              {"s", cert.s},
              {"t", cert.t},
              {"steps", std::move(steps)},
              {"intermediates", std::move(inter)}};
}

ShiftCertificate certificate_from_json(const json& j) {
  ShiftCertificate cert;
  cert.field = field_from_json(j);
  cert.sigma = weight_from_json(cert.field, need(j, "sigma"));
  cert.e = need(j, "e").get<long>();
  cert.s = need(j, "s").get<long>();
  cert.t = need(j, "t").get<long>();
  for (const auto& s : need(j, "steps")) cert.steps.push_back(step_from_json(s));
  if (j.contains("intermediates")) {
    for (const auto& sp : j["intermediates"]) {
      cert.intermediates.push_back(sym_product_from_json(sp));
    }
  }
  return cert;
}

json profile_to_json(const RamificationProfile& profile) {
  json places = json::array();
  for (const auto& pl : profile.places) places.push_back(json{{"e", pl.e}, {"f", pl.f}});
  return json{{"p", profile.p}, {"k", profile.k}, {"places", std::move(places)}};
}

RamificationProfile profile_from_json(const json& j) {
  RamificationProfile profile;
  profile.p = need(j, "p").get<long>();
  profile.k = need(j, "k").get<long>();
  for (const auto& pl : need(j, "places")) {
    profile.places.push_back({need(pl, "e").get<long>(), need(pl, "f").get<int>()});
  }
  if (profile.places.empty()) fail(ErrorCode::BadInput, "profile needs at least one place");
  return profile;
}

json schedule_to_json(const LiftWeightSchedule& sched) {
  json places = json::array();
  for (const auto& rep : sched.places) {
    json weights = json::array();
    for (const auto& w : rep.weights) weights.push_back(weight_to_json(w));
    json certs = json::array();
    for (const auto& c : rep.certificates) certs.push_back(certificate_to_json(c));
    places.push_back(json{{"e", rep.place.e},
                          {"f", rep.place.f},
                          {"weights", std::move(weights)},
                          {"certificates", std::move(certs)}});
  }
  json schedule = json::array();
  for (size_t i = 0; i < sched.sample_weights.size(); ++i) {
    long n = sched.n0 + static_cast<long>(i);
    schedule.push_back(json{{"n", n},
                            {"weight", sched.sample_weights[i]},
                            {"sym_exponent", sched.k - 2 + n * sched.delta}});
  }
  return json{{"k", sched.k},
              {"delta", sched.delta},
              {"n0", sched.n0},
              {"schedule", std::move(schedule)},
              {"places", std::move(places)}};
}

json brauer_table_to_json(const BrauerTable& table) {
  const BaseField& field = table.field();
  json classes = json::array();
  for (const auto& cls : table.classes()) {
    classes.push_back(json{{"kind", to_string(cls.kind)},
                           {"lambda", cls.dlog_lambda},
                           {"mu", cls.dlog_mu}});
  }
  json weights = json::array();
  json values = json::array();
  for (const Weight& w : all_weights(field)) {
    weights.push_back(weight_to_json(w));
    json row = json::array();
    for (const auto& cls : table.classes()) {
      row.push_back(table.value(w, cls).coeffs());
    }
    values.push_back(std::move(row));
  }
  return json{{"p", field.p},
              {"f", field.f},
              {"generator_poly", table.generator_poly()},
              {"root_order", table.modulus()},
              {"classes", std::move(classes)},
              {"weights", std::move(weights)},
              {"values", std::move(values)}};
}

std::string brauer_table_to_csv(const BrauerTable& table) {
  const BaseField& field = table.field();
  std::ostringstream os;
  os << "weight";
  for (const auto& cls : table.classes()) {
    os << "," << to_string(cls.kind) << "(" << cls.dlog_lambda << ";" << cls.dlog_mu << ")";
  }
  os << "\n";
  for (const Weight& w : all_weights(field)) {
    os << "det^" << w.a << "*S(";
    for (size_t i = 0; i < w.n.size(); ++i) {
      if (i) os << ";";
      os << w.n[i];
    }
    os << ")";
    for (const auto& cls : table.classes()) {
      os << ",\"" << table.value(w, cls).to_poly_string() << "\"";
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace gl2groth
