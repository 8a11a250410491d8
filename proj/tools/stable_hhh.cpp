// stable-hhh: command-line front end.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hhh/hhh.hpp"
#include "hhh/json_io.hpp"
#include "hhh/oracle.hpp"
#include "hhh/verify.hpp"

using namespace hhh;

namespace {

struct Config {
  int n = 0;
  std::string perm;
  std::string cycle_type;
  std::optional<int> t_max;
  std::string q_window;
  std::optional<int> a_max;
  int jobs = 1;
  std::string out;
  std::size_t spair_budget = GroebnerOptions{}.spair_budget;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Window window_of(const Config& c) {
  Window w = default_window(c.n);
  if (!c.q_window.empty()) {
    auto colon = c.q_window.find(':');
    if (colon == std::string::npos) throw UsageError("--q-window expects A:B, got '" + c.q_window + "'");
    try {
      std::size_t p1 = 0, p2 = 0;
      std::string lo = c.q_window.substr(0, colon), hi = c.q_window.substr(colon + 1);
      w.qmin = std::stoi(lo, &p1);
      w.qmax = std::stoi(hi, &p2);
      if (p1 != lo.size() || p2 != hi.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw UsageError("--q-window expects integers A:B, got '" + c.q_window + "'");
    }
  }
  if (c.t_max) w.tmax = *c.t_max;
  if (c.a_max) w.amax = *c.a_max;
  if (w.empty()) throw UsageError("empty window");
  return w;
}

/// The permutations selected by --perm / --cycle-type; all cycle types when neither is given.
std::vector<Permutation> perms_of(const Config& c) {
  if (!c.perm.empty() && !c.cycle_type.empty()) throw UsageError("--perm and --cycle-type are exclusive");
  if (!c.perm.empty()) return {Permutation::parse(c.perm, c.n)};
  if (!c.cycle_type.empty()) return {Permutation::special(parse_cycle_type(c.cycle_type, c.n))};
  std::vector<Permutation> out;
  for (const auto& ct : partitions(c.n)) out.push_back(Permutation::special(ct));
  return out;
}

Permutation single_perm(const Config& c) {
  if (c.perm.empty() && c.cycle_type.empty()) return Permutation(c.n);
  return perms_of(c).front();
}

json header(const char* command, const Config& c) {
  return json{{"schema", kSchema}, {"command", command}, {"n", c.n}};
}

json checks_json(const std::vector<Check>& checks) {
  json out = json::array();
  for (const auto& ch : checks) {
    json j{{"name", ch.name}, {"pass", ch.pass}};
    if (!ch.detail.empty()) j["detail"] = ch.detail;
    out.push_back(j);
  }
  return out;
}

int run_compute(const Config& c, json& rep) {
  Window w = window_of(c);
  Permutation p = single_perm(c);
  GroebnerOptions opts{c.spair_budget};
  StableHomologyPresentation pres = stable_homology_presentation(c.n, p, opts);
  PoincareSeries s = poincare_series(c.n, pres.cycle_type);
  rep = header("compute", c);
  rep["perm"] = p.str();
  rep["cycle_type"] = pres.cycle_type;
  rep["window"] = to_json(w);
  rep["presentation"] = to_json(pres);
  rep["shift"] = json{{"q", pres.unit_shift.q}, {"t", pres.unit_shift.t}};
  rep["poincare_closed_form"] = to_json(s);
  DimTable table = full_hhh(pres, w);
  rep["expansion"] = to_json(table);
  json ext = json::array();
  for (const auto& d : pres.exterior) ext.push_back(to_json(d));
  rep["exterior_degrees"] = ext;
  rep["closed_form_check"] = to_json(compare(table, s, w));
  return 0;
}

int run_e_ring(const Config& c, json& rep) {
  Window w = window_of(c);
  GroebnerOptions opts{c.spair_budget};
  Quotient E = e_ring(c.n, opts);
  EIsoReport iso = verify_E_isomorphism(c.n, w, opts);
  rep = header("e-ring", c);
  rep["presentation"] = to_json(E);
  json fwd = json::array(), bwd = json::array();
  for (std::size_t k = 0; k < iso.forward_images.size(); ++k)
    fwd.push_back(json{{"image", to_json(iso.forward_images[k])}, {"member", static_cast<bool>(iso.forward_member[k])}});
  for (std::size_t k = 0; k < iso.backward_images.size(); ++k)
    bwd.push_back(json{{"image", to_json(iso.backward_images[k])}, {"member", static_cast<bool>(iso.backward_member[k])}});
  rep["isomorphism"] = json{{"window", to_json(w)},
                            {"forward", fwd},
                            {"backward", bwd},
                            {"hilbert_agree", iso.hilbert_agree},
                            {"verdict", iso.pass() ? "PASS" : "FAIL"}};
  return iso.pass() ? 0 : 2;
}

int run_mf_simplify(const Config& c, json& rep) {
  std::optional<Permutation> twist;
  if (!c.perm.empty() || !c.cycle_type.empty()) twist = single_perm(c);
  rep = header("mf simplify", c);
  if (twist) rep["perm"] = twist->str();
  rep["trace"] = to_json(mf_simplify(c.n, twist));
  return 0;
}

int run_verify_identities(const Config& c, json& rep) {
  std::vector<Check> checks = identity_suite(c.n);
  for (auto& ch : dg_suite(c.n)) checks.push_back(std::move(ch));
  bool ok = all_pass(checks);
  rep = header("verify identities", c);
  rep["checks"] = checks_json(checks);
  rep["verdict"] = ok ? "PASS" : "FAIL";
  return ok ? 0 : 2;
}

int run_verify_homology(const Config& c, json& rep) {
  Window w = window_of(c);
  OracleOptions oo;
  oo.jobs = c.jobs;
  bool ok = true;
  json cases = json::array();
  for (const Permutation& p : perms_of(c)) {
    std::vector<int> ct = p.cycle_type();
    Window ew = w;
    ew.qmax += c.n * (c.n + 1);
    ew.amin = ew.amax = 0;
    OracleStats st;
    DimTable h = bidegree_homology(hh0_specialize(build_Mn(c.n, p)), ew, oo, &st);
    CompareReport r = compare(with_exterior(h, c.n, w), poincare_series(c.n, ct), w);
    ok = ok && r.pass;
    cases.push_back(json{{"perm", p.str()},
                         {"cycle_type", ct},
                         {"comparison", to_json(r)},
                         {"oracle", {{"columns", st.columns}, {"max_dim", st.max_dim}, {"total_dim", st.total_dim}}}});
  }
  rep = header("verify homology", c);
  rep["window"] = to_json(w);
  rep["cases"] = cases;
  rep["verdict"] = ok ? "PASS" : "FAIL";
  return ok ? 0 : 2;
}

int run_series_expand(const Config& c, json& rep) {
  Window w = window_of(c);
  std::vector<int> ct = single_perm(c).cycle_type();
  PoincareSeries s = poincare_series(c.n, ct);
  rep = header("series-expand", c);
  rep["cycle_type"] = ct;
  rep["window"] = to_json(w);
  rep["series"] = to_json(s);
  rep["expansion"] = to_json(expand_series(s, w));
  rep["t_minus_one"] = to_json(specialize_t_minus_one(s));
  return 0;
}

void add_common(CLI::App* sub, Config& c, bool window) {
  sub->add_option("--n", c.n, "number of strands")->required();
  sub->add_option("--perm", c.perm, "permutation in cycle notation, e.g. \"(1 2)(3)\"");
  sub->add_option("--cycle-type", c.cycle_type, "cycle type, e.g. 2,1");
  sub->add_option("--out", c.out, "write the JSON report to this file");
  sub->add_option("--spair-budget", c.spair_budget, "S-pair limit for Groebner computations");
  if (window) {
    sub->add_option("--t-max", c.t_max, "largest homological degree");
    sub->add_option("--q-window", c.q_window, "q range A:B");
    sub->add_option("--a-max", c.a_max, "largest Hochschild degree");
    sub->add_option("--jobs", c.jobs, "worker threads (default $STABLE_HHH_JOBS or 1)");
  }
}

}  // namespace

int main(int argc, char** argv) {
  // hyphenated spellings of the nested commands
  std::vector<std::string> args(argv, argv + argc);
  if (args.size() > 1) {
    if (args[1] == "mf-simplify") args.insert(args.erase(args.begin() + 1), {"mf", "simplify"});
    else if (args[1] == "verify-identities") args.insert(args.erase(args.begin() + 1), {"verify", "identities"});
    else if (args[1] == "verify-homology") args.insert(args.erase(args.begin() + 1), {"verify", "homology"});
  }

  Config c;
  if (const char* env = std::getenv("STABLE_HHH_JOBS")) {
    try {
      c.jobs = std::stoi(env);
    } catch (const std::exception&) {
      std::cerr << "error: STABLE_HHH_JOBS must be an integer\n";
      return 1;
    }
  }

  CLI::App app{"Stable triply graded homology of torus-link closures"};
  app.require_subcommand(1);
  auto* compute = app.add_subcommand("compute", "presentation, closed form and expansion for one permutation");
  auto* ering = app.add_subcommand("e-ring", "the flag ring E and its isomorphism check");
  auto* mf = app.add_subcommand("mf", "matrix factorization reductions");
  mf->require_subcommand(1);
  auto* simplify = mf->add_subcommand("simplify", "move-by-move reduction trace of M_n");
  auto* verify = app.add_subcommand("verify", "exact verification suites");
  verify->require_subcommand(1);
  auto* identities = verify->add_subcommand("identities", "polynomial identities and dg checks");
  auto* homology = verify->add_subcommand("homology", "oracle homology against the closed form");
  auto* series = app.add_subcommand("series-expand", "expand the closed-form Poincare series");
  add_common(compute, c, true);
  add_common(ering, c, true);
  add_common(simplify, c, false);
  add_common(identities, c, false);
  add_common(homology, c, true);
  add_common(series, c, true);

  std::vector<const char*> cargs;
  for (const auto& a : args) cargs.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  auto started = std::chrono::steady_clock::now();
  json rep;
  int status = 0;
  try {
    if (c.n < 1) throw UsageError("--n must be at least 1");
    if (c.jobs < 1) throw UsageError("--jobs must be at least 1");
    if (*compute) status = run_compute(c, rep);
    else if (*ering) status = run_e_ring(c, rep);
    else if (*simplify) status = run_mf_simplify(c, rep);
    else if (*identities) status = run_verify_identities(c, rep);
    else if (*homology) status = run_verify_homology(c, rep);
    else status = run_series_expand(c, rep);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error (" << errc_name(e.code()) << "): " << e.what() << "\n";
    return 1;
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  rep["meta"] = json{{"seconds", secs}, {"jobs", c.jobs}};

  std::string text = rep.dump(2) + "\n";
  if (c.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(c.out);
    if (!f) {
      std::cerr << "error: cannot write " << c.out << "\n";
      return 1;
    }
    f << text;
    if (rep.contains("verdict")) std::cerr << rep["verdict"].get<std::string>() << "\n";
  }
  return status;
}
