// Copyright 2026 The pstkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pstkit/report.hpp"

#include "pstkit/error.hpp"

namespace pstkit {

namespace {

const char *const kRoman[] = {"i", "ii", "iii"};

Json condition_json(const std::string &name, const ConditionResult &c) {
  Json j;
  j["condition"] = name;
  j["evaluated"] = c.evaluated;
  j["pass"] = c.pass;
  j["witness"] = c.witness;
  return j;
}

Json conditions_json(const std::array<ConditionResult, 3> &cs) {
  Json out = Json::array();
  for (std::size_t i = 0; i < 3; ++i) out.push_back(condition_json(kRoman[i], cs[i]));
  return out;
}

template <typename T, typename F>
Json list(const std::vector<T> &xs, F f) {
  Json out = Json::array();
  for (const T &x : xs) out.push_back(f(x));
  return out;
}

Json quad_list(const std::vector<QuadValue> &xs) {
  return list(xs, [](const QuadValue &q) { return q.str(); });
}

Json int_list(const std::vector<Integer> &xs) { return list(xs, integer_json); }

Json pairs_json(const std::vector<std::pair<std::size_t, std::size_t>> &pairs) {
  Json out = Json::array();
  for (auto [a, b] : pairs) out.push_back(Json::array({a, b}));
  return out;
}

Json switching_report_json(const SwitchingReport &r) {
  Json j;
  j["case"] = to_string(r.kind);
  j["method"] = to_string(r.method);
  j["tau"] = r.tau ? Json(r.tau->str()) : Json(nullptr);
  j["phase"] = r.lambda ? Json(r.lambda->str()) : Json(nullptr);
  j["pairs"] = pairs_json(r.pairs);
  j["reason"] = r.reason;
  return j;
}

const Json &field(const Json &doc, const char *name) {
  if (!doc.contains(name)) throw ParseError(std::string("document lacks field '") + name + "'");
  return doc.at(name);
}

std::size_t index_field(const Json &doc, const char *name) {
  const Json &v = field(doc, name);
  if (!v.is_number_unsigned()) throw ParseError(std::string("field '") + name + "' must be a vertex index");
  return v.get<std::size_t>();
}

std::string string_field(const Json &doc, const char *name) {
  const Json &v = field(doc, name);
  if (!v.is_string()) throw ParseError(std::string("field '") + name + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

Json integer_json(const Integer &v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Json spectrum_json(const Graph &g, const SpectralDecomposition &d) {
  Json j;
  j["type"] = "spectrum";
  j["graph"] = g.name();
  j["graph6"] = write_graph6(g);
  j["n"] = g.order();
  const auto delta = d.delta();
  j["delta"] = delta ? Json(*delta) : Json(nullptr);
  j["complete"] = d.complete();
  Json eig = Json::array();
  for (const Eigenspace &e : d.eigenspaces()) {
    Json x;
    x["value"] = e.exact ? Json(e.value.str()) : Json(nullptr);
    x["numeric"] = e.numeric;
    x["multiplicity"] = e.multiplicity;
    x["exact"] = e.exact;
    eig.push_back(std::move(x));
  }
  j["eigenvalues"] = std::move(eig);
  Json supports = Json::array();
  for (std::size_t u = 0; u < g.order(); ++u) {
    const Support s = support(d, u);
    Json x;
    x["vertex"] = u;
    x["eigenspaces"] = s.indices;
    x["unrecognized_weight"] = s.unrecognized_weight.get_str();
    supports.push_back(std::move(x));
  }
  j["supports"] = std::move(supports);
  return j;
}

Json pst_json(const PSTResult &r, const Graph &g, std::size_t u, std::size_t v) {
  Json j;
  if (r.certificate) {
    const PSTCertificate &c = *r.certificate;
    j["type"] = "pst";
    j["graph"] = g.name();
    j["graph6"] = write_graph6(g);
    j["u"] = c.u;
    j["v"] = c.v;
    j["delta"] = c.delta;
    j["a"] = integer_json(c.a);
    j["eigenvalues"] = quad_list(c.eigenvalues);
    j["b"] = int_list(c.b);
    j["signs"] = c.signs;
    j["g"] = integer_json(c.g);
    j["tau0"] = c.tau0.str();
    j["phase"] = c.phase.str();
    j["conditions"] = conditions_json(c.conditions);
    return j;
  }
  const PSTFailure &f = *r.failure;
  j["type"] = "pst_failure";
  j["graph"] = g.name();
  j["graph6"] = write_graph6(g);
  j["u"] = u;
  j["v"] = v;
  j["condition"] = kRoman[f.condition - 1];
  j["witness"] = f.witness;
  j["conditions"] = conditions_json(f.conditions);
  return j;
}

Json tensor_json(const TensorPSTReport &r, const Graph &host, std::size_t nx, std::optional<std::size_t> k0) {
  static const char *const names[] = {"hypothesis", "i", "ii", "iii"};
  Json j;
  j["type"] = k0 ? "min_power" : "tensor";
  j["graph"] = host.name();
  j["graph6"] = write_graph6(host);
  j["nx"] = nx;
  if (k0) j["k0"] = *k0;
  j["pass"] = r.pass();
  j["w"] = r.w;
  j["z"] = r.z;
  j["u"] = r.u;
  j["v"] = r.v;
  j["delta_w"] = r.delta_w;
  j["delta_u"] = r.delta_u;
  j["eigenvalues"] = quad_list(r.eigenvalues);
  j["signs"] = r.signs;
  j["t"] = int_list(r.t);
  j["odd_parts"] = int_list(r.odd_parts);
  j["f"] = r.f;
  j["e"] = r.e;
  j["ell"] = integer_json(r.ell);
  j["n"] = integer_json(r.n);
  j["m"] = integer_json(r.m);
  Json conds = Json::array();
  for (std::size_t i = 0; i < 4; ++i) conds.push_back(condition_json(names[i], r.conditions[i]));
  j["conditions"] = std::move(conds);
  j["failed_condition"] = r.failed_condition < 0 ? Json(nullptr) : Json(names[r.failed_condition]);
  j["tau"] = r.tau ? Json(r.tau->str()) : Json(nullptr);
  j["phase"] = r.phase ? Json(r.phase->str()) : Json(nullptr);
  return j;
}

Json tensor_necessary_json(const TensorNecessaryResult &r, const std::string &name) {
  Json j;
  j["type"] = "tensor_necessary";
  j["graph"] = name;
  j["ok"] = r.ok();
  Json checks = Json::array();
  for (const FactorCheck &c : r.checks) {
    Json x;
    x["factor"] = c.factor;
    x["kind"] = to_string(c.kind);
    x["from"] = c.from;
    x["to"] = c.to;
    x["satisfied"] = to_string(c.satisfied);
    x["detail"] = c.detail;
    checks.push_back(std::move(x));
  }
  j["checks"] = std::move(checks);
  j["violation"] = r.violation ? Json(*r.violation) : Json(nullptr);
  return j;
}

Json switching_json(const std::vector<SwitchingReport> &reports, const Graph &host) {
  Json j;
  j["type"] = "switching";
  j["graph"] = host.name();
  j["graph6"] = write_graph6(host);
  j["reports"] = list(reports, switching_report_json);
  return j;
}

Json complement_json(const ComplementReport &r, const Graph &host) {
  Json j;
  j["type"] = "complement_switching";
  j["graph"] = host.name();
  j["graph6"] = write_graph6(host);
  j["pass"] = r.pass;
  j["stated_condition"] = r.stated_condition;
  j["eigenvalues"] = quad_list(r.eigenvalues);
  j["reports"] = list(r.reports, switching_report_json);
  j["reason"] = r.reason;
  return j;
}

Json scan_json(const ScanResult &r, const Graph &g, std::size_t u, std::size_t v) {
  Json j;
  j["type"] = "scan";
  j["graph"] = g.name();
  j["graph6"] = write_graph6(g);
  j["u"] = u;
  j["v"] = v;
  j["t_max"] = r.t_max;
  j["step"] = r.step;
  j["best_t"] = r.best_t;
  j["best_fidelity"] = r.best_fidelity;
  return j;
}

Json verify_json(const VerifyResult &r, const Graph &g, std::size_t u, std::size_t v, const ExactTime &tau,
                 const Phase &phase) {
  Json j;
  j["type"] = "verify";
  j["graph"] = g.name();
  j["graph6"] = write_graph6(g);
  j["u"] = u;
  j["v"] = v;
  j["tau"] = tau.str();
  j["phase"] = phase.str();
  j["pass"] = r.pass;
  j["fidelity"] = r.fidelity;
  j["phase_error"] = r.phase_error;
  j["detail"] = r.detail;
  return j;
}

std::vector<TransferClaim> transfer_claims(const Json &doc) {
  if (!doc.is_object()) throw ParseError("document must be a JSON object");
  const std::string type = string_field(doc, "type");
  std::vector<TransferClaim> out;
  auto claim = [&](const std::string &g6, std::size_t u, std::size_t v, const std::string &tau,
                   const std::string &phase) {
    out.push_back({g6, u, v, ExactTime::parse(tau), Phase::parse(phase)});
  };
  if (type == "pst") {
    claim(string_field(doc, "graph6"), index_field(doc, "u"), index_field(doc, "v"), string_field(doc, "tau0"),
          string_field(doc, "phase"));
  } else if (type == "tensor" || type == "min_power") {
    if (!field(doc, "pass").get<bool>()) return out;
    const std::string g6 = string_field(doc, "graph6");
    const std::size_t order = parse_graph6(g6).order();
    const std::size_t w = index_field(doc, "w");
    const std::size_t z = index_field(doc, "z");
    const std::size_t u = index_field(doc, "u");
    const std::size_t v = index_field(doc, "v");
    const std::size_t nx = index_field(doc, "nx");
    if (nx == 0 || order % nx != 0) throw ParseError("field 'nx' does not divide the host order");
    const std::size_t ny = order / nx;
    claim(g6, w * ny + u, z * ny + v, string_field(doc, "tau"), string_field(doc, "phase"));
  } else if (type == "switching" || type == "complement_switching") {
    const std::string g6 = string_field(doc, "graph6");
    for (const Json &r : field(doc, "reports")) {
      if (r.at("case") == "none") continue;
      for (const Json &p : field(r, "pairs"))
        claim(g6, p.at(0).get<std::size_t>(), p.at(1).get<std::size_t>(), string_field(r, "tau"),
              string_field(r, "phase"));
    }
  } else if (type == "search") {
    const std::string g6 = string_field(doc, "graph6");
    for (const Json &p : field(doc, "pairs"))
      claim(g6, index_field(p, "u"), index_field(p, "v"), string_field(p, "tau0"), string_field(p, "phase"));
  }
  return out;
}

}  // namespace pstkit
