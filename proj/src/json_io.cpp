#include "hhh/json_io.hpp"

namespace hhh {

json to_json(const TriDegree& d) { return json{{"q", d.q}, {"t", d.t}, {"a", d.a}}; }

json to_json(const Window& w) {
  return json{{"q", {w.qmin, w.qmax}}, {"t", {w.tmin, w.tmax}}, {"a", {w.amin, w.amax}}};
}

json to_json(const Poly& p) {
  json out = json::array();
  const Registry& reg = *p.registry();
  for (const auto& [m, c] : p.terms()) {
    json exps = json::object();
    for (std::size_t k = 0; k < reg.size(); ++k)
      if (m[k]) exps[reg[k].name] = m[k];
    out.push_back(json{{"coeff", c.get_str()}, {"exps", exps}});
  }
  return out;
}

Poly poly_from_json(const RegistryPtr& reg, const json& j) {
  if (!j.is_array()) throw Error(Errc::parse_error, "polynomial must be a JSON array");
  std::vector<Poly::Term> terms;
  for (const auto& t : j) {
    Rational c;
    if (c.set_str(t.at("coeff").get<std::string>(), 10) != 0)
      throw Error(Errc::parse_error, "bad coefficient " + t.at("coeff").dump());
    c.canonicalize();
    Monomial m;
    for (const auto& [name, e] : t.at("exps").items()) m.set(reg->index(name), e.get<int>());
    terms.push_back({m, c});
  }
  return Poly(reg, std::move(terms));
}

json to_json(const Registry& reg) {
  json out = json::array();
  for (const auto& v : reg.variables()) out.push_back(json{{"name", v.name}, {"degree", to_json(v.degree)}});
  return out;
}

namespace {
json poly_list(const std::vector<Poly>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(to_json(p));
  return out;
}
}  // namespace

json to_json(const Quotient& q) {
  return json{{"vars", to_json(*q.registry())},
              {"generators", poly_list(q.ideal().generators)},
              {"groebner", poly_list(q.basis())},
              {"shift", to_json(q.shift())}};
}

json to_json(const KoszulFactorization& K) {
  json rows = json::array();
  for (const auto& r : K.rows)
    rows.push_back(json{{"label", r.label}, {"a", to_json(r.a)}, {"b", to_json(r.b)}, {"shift", to_json(r.shift)}});
  return json{{"vars", to_json(*K.registry())},
              {"base", poly_list(K.base->ideal().generators)},
              {"rows", rows},
              {"global_shift", to_json(K.global_shift)}};
}

json to_json(const std::vector<MoveRecord>& trace) {
  json out = json::array();
  for (const auto& rec : trace) {
    json params = json::object();
    for (const auto& [k, v] : rec.params) params[k] = v;
    out.push_back(json{{"move", rec.move}, {"params", params}, {"result", to_json(rec.result)}, {"potential", to_json(rec.potential)}});
  }
  return out;
}

json to_json(const DimTable& table) {
  json out = json::array();
  for (const auto& [d, c] : table)
    if (c) out.push_back(json{{"q", d.q}, {"t", d.t}, {"a", d.a}, {"dim", c}});
  return out;
}

json to_json(const PoincareSeries& s) {
  json num = json::array(), den = json::array();
  for (const auto& f : s.numerators) num.push_back(json{{"sign", f.sign}, {"degree", to_json(f.degree)}});
  for (const auto& d : s.denominators) den.push_back(to_json(d));
  return json{{"formula", s.str()},
              {"prefactor_coeff", s.prefactor_coeff},
              {"prefactor", to_json(s.prefactor)},
              {"numerators", num},
              {"denominators", den}};
}

json to_json(const StableHomologyPresentation& p) {
  json ext = json::array();
  for (const auto& d : p.exterior) ext.push_back(to_json(d));
  return json{{"n", p.n},
              {"perm", p.w.str()},
              {"cycle_type", p.cycle_type},
              {"ring", to_json(*p.ring)},
              {"sequence", poly_list(p.sequence)},
              {"shift", to_json(p.unit_shift)},
              {"exterior_degrees", ext}};
}

json to_json(const CompareReport& r) {
  json mm = json::array();
  for (const auto& m : r.mismatches)
    mm.push_back(json{{"degree", to_json(m.degree)}, {"expected", m.expected}, {"actual", m.actual}});
  return json{{"pass", r.pass}, {"window", to_json(r.window)}, {"mismatch_count", r.mismatch_count}, {"mismatches", mm}};
}

json to_json(const RegularityVerdict& v) {
  json out{{"verdict", v.accept ? "ACCEPT" : "REJECT"}, {"window", to_json(v.window)}};
  if (v.first_failure) {
    out["first_failure"] = to_json(*v.first_failure);
    out["expected"] = v.expected;
    out["actual"] = v.actual;
  }
  return out;
}

}  // namespace hhh
