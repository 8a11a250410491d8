#include "hhh/mf.hpp"

#include <bit>
#include <mutex>
#include <sstream>

#include "hhh/schubert.hpp"
#include "hhh/symcomb.hpp"

namespace hhh {

QuotientPtr free_quotient(const RegistryPtr& reg) { return std::make_shared<const Quotient>(Ideal{reg, {}}); }

Ideal In_ideal(int n, const RegistryPtr& reg) {
  Ideal I{reg, {}};
  for (int k = 1; k <= n; ++k) I.generators.push_back(elementary(reg, k, y_vars(1, n)) - elementary(reg, k, x_vars(1, n)));
  return I;
}

QuotientPtr In_quotient(int n) {
  static std::mutex mu;
  static std::map<int, QuotientPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  RegistryPtr reg = xyu_registry(n);
  return cache[n] = std::make_shared<const Quotient>(In_ideal(n, reg));
}

namespace {

const KoszulRow& row_at(const KoszulFactorization& K, int i) {
  if (i < 1 || i > static_cast<int>(K.rows.size())) throw Error(Errc::index_out_of_range, "row index out of range");
  return K.rows[i - 1];
}

void check_same_potential(const KoszulFactorization& before, const KoszulFactorization& after) {
  Poly p = potential(before);
  Poly q = potential(after).rebase(p.registry());
  if (!(p == q)) throw Error(Errc::internal, "move changed the potential");
}

}  // namespace

void check_row(const KoszulRow& row) {
  if (!row.a.is_zero() && tridegree_of(row.a) != kDiff - row.shift)
    throw Error(Errc::degree_mismatch, "left entry " + row.a.str() + " has the wrong degree");
  if (!row.b.is_zero() && tridegree_of(row.b) != row.shift + kDiff)
    throw Error(Errc::degree_mismatch, "right entry " + row.b.str() + " has the wrong degree");
}

Poly potential(const KoszulFactorization& K) {
  Poly acc(K.registry());
  for (const auto& r : K.rows) acc += r.a * r.b;
  return K.base->normal_form(acc);
}

KoszulFactorization row_transform(const KoszulFactorization& K, int i, int j, const Poly& lambda) {
  if (i == j) throw Error(Errc::index_out_of_range, "row_transform needs distinct rows");
  const KoszulRow& ri = row_at(K, i);
  const KoszulRow& rj = row_at(K, j);
  Poly lam = lambda.rebase(K.registry());
  if (!lam.is_zero() && tridegree_of(lam) != ri.shift - rj.shift)
    throw Error(Errc::degree_mismatch, "multiplier " + lam.str() + " has the wrong degree");
  KoszulFactorization out = K;
  out.rows[i - 1].b = ri.b + lam * rj.b;
  out.rows[j - 1].a = rj.a - lam * ri.a;
  check_same_potential(K, out);
  return out;
}

KoszulFactorization scale_row(const KoszulFactorization& K, int i, const Rational& lambda) {
  if (lambda == 0) throw Error(Errc::degree_mismatch, "scale factor must be nonzero");
  row_at(K, i);
  KoszulFactorization out = K;
  out.rows[i - 1].a = out.rows[i - 1].a * lambda;
  out.rows[i - 1].b = out.rows[i - 1].b * (Rational(1) / lambda);
  check_same_potential(K, out);
  return out;
}

KoszulFactorization exclude_variable(const KoszulFactorization& K, int row, const std::string& var) {
  const KoszulRow& r = row_at(K, row);
  const Registry& reg = *K.registry();
  auto vk = reg.find(var);
  auto fail = [&](const std::string& why) {
    throw Error(Errc::exclusion_precondition, "cannot exclude " + var + " via row " + std::to_string(row) + ": " + why);
  };
  if (!vk) fail("unknown variable");
  if (!r.a.is_zero()) fail("left entry is not zero");
  Monomial vm;
  vm.set(*vk, 1);
  Rational c = 0;
  Poly rest(K.registry());
  for (const auto& [m, coef] : r.b.terms()) {
    if (m == vm) c = coef;
    else if (m.e[*vk]) fail("right entry is not of the form var - p");
    else rest += Poly::monomial(K.registry(), m, coef);
  }
  if (c == 0) fail("right entry does not contain the variable linearly");
  if (potential(K).involves(*vk)) fail("potential involves the variable");
  Poly image = rest * (Rational(-1) / c);

  std::vector<Variable> vars;
  for (const auto& v : reg.variables())
    if (v.name != var) vars.push_back(v);
  RegistryPtr target = std::make_shared<const Registry>(reg.n(), vars);
  Assignment sub;
  sub.emplace(var, image);
  auto push = [&](const Poly& p) { return substitute(p, sub, K.registry()).rebase(target); };

  Ideal ideal{target, {}};
  for (const Poly& g : K.base->ideal().generators) ideal.generators.push_back(push(g));
  KoszulFactorization out;
  out.base = std::make_shared<const Quotient>(std::move(ideal), K.base->shift());
  out.global_shift = K.global_shift;
  for (int k = 1; k <= static_cast<int>(K.rows.size()); ++k) {
    if (k == row) continue;
    const KoszulRow& s = K.rows[k - 1];
    out.rows.push_back({push(s.a), push(s.b), s.shift, s.label});
  }
  return out;
}

KoszulFactorization drop_zero_entries(const KoszulFactorization& K) {
  KoszulFactorization out = K;
  for (auto& r : out.rows) {
    if (!r.a.is_zero() && K.base->contains(r.a)) r.a = Poly(K.registry());
    if (!r.b.is_zero() && K.base->contains(r.b)) r.b = Poly(K.registry());
  }
  return out;
}

KoszulFactorization build_Mn(int n, const std::optional<Permutation>& twist) {
  if (n < 1) throw Error(Errc::index_out_of_range, "n must be positive");
  if (twist && twist->n() != n) throw Error(Errc::invalid_permutation, "twist has the wrong size");
  KoszulFactorization K;
  K.base = In_quotient(n);
  const RegistryPtr& reg = K.registry();
  Assignment tw;
  if (twist)
    for (int i = 1; i <= n; ++i) tw.emplace(y_name(i), Poly::var(reg, y_name((*twist)(i))));
  for (int j = 1; j <= n; ++j) {
    Poly a = p_poly(reg, j, j);
    Poly b = b_poly(j, n, std::nullopt, reg);
    if (twist) {
      a = substitute(a, tw, reg);
      b = substitute(b, tw, reg);
    }
    K.rows.push_back({a, b, kTheta, j});
  }
  K.global_shift = {-n * (n - 1), 0, 0};
  return K;
}

std::vector<MoveRecord> mf_simplify(int n, const std::optional<Permutation>& twist) {
  std::vector<MoveRecord> trace;
  auto record = [&](std::string move, std::map<std::string, std::string> params, KoszulFactorization K) {
    Poly pot = potential(K);
    trace.push_back({std::move(move), std::move(params), std::move(K), std::move(pot)});
  };
  std::map<std::string, std::string> bp{{"n", std::to_string(n)}};
  if (twist) bp["perm"] = twist->str();
  record("build_Mn", bp, build_Mn(n, twist));
  for (int j = 2; j <= n; ++j) {
    KoszulFactorization K = row_transform(trace.back().result, j, 1, Poly::constant(trace.back().result.registry(), -1));
    record("row_transform", {{"i", std::to_string(j)}, {"j", "1"}, {"lambda", "-1"}}, std::move(K));
  }
  record("drop_zero_entries", {}, drop_zero_entries(trace.back().result));
  record("exclude_variable", {{"row", "1"}, {"var", u_name(1)}}, exclude_variable(trace.back().result, 1, u_name(1)));
  return trace;
}

// ---------------------------------------------------------------- dg modules

DgModule to_dg_module(const KoszulFactorization& K) {
  if (K.rows.size() > 31) throw Error(Errc::resource_limit, "too many odd generators");
  DgModule D;
  D.base = K.base;
  D.unit_shift = K.global_shift;
  for (const auto& r : K.rows) {
    D.labels.push_back(r.label);
    D.dA.push_back(r.b);
    D.dM.push_back(r.a);
  }
  return D;
}

namespace {

void add_to(ModuleElement& m, ThetaSet S, const Poly& c) {
  if (c.is_zero()) return;
  auto it = m.find(S);
  if (it == m.end()) {
    m.emplace(S, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) m.erase(it);
}

int popcount(ThetaSet s) { return std::popcount(s); }

}  // namespace

ModuleElement DgModule::d_generator(ThetaSet S) const {
  ModuleElement out;
  int size = popcount(S);
  int idx = 0;
  for (std::size_t p = 0; p < rank(); ++p) {
    ThetaSet bit = ThetaSet(1) << p;
    if (S & bit) {
      // contraction with the idx-th factor
      add_to(out, S & ~bit, (idx % 2) ? -dA[p] : dA[p]);
      ++idx;
    } else {
      int above = popcount(S & ~((bit << 1) - 1));
      add_to(out, S | bit, ((size + above) % 2) ? -dM[p] : dM[p]);
    }
  }
  return out;
}

ModuleElement DgModule::d(const ModuleElement& m) const {
  ModuleElement out;
  for (const auto& [S, c] : m)
    for (const auto& [T, e] : d_generator(S)) add_to(out, T, c * e);
  return out;
}

ModuleElement DgModule::reduce(const ModuleElement& m) const {
  ModuleElement out;
  for (const auto& [S, c] : m) {
    Poly r = base->normal_form(c);
    if (!r.is_zero()) out.emplace(S, r);
  }
  return out;
}

std::string theta_str(const DgModule& D, ThetaSet S) {
  std::ostringstream os;
  for (std::size_t p = 0; p < D.rank(); ++p)
    if (S >> p & 1) os << "th" << D.labels[p];
  return S ? os.str() : "1";
}

std::string element_str(const DgModule& D, const ModuleElement& m) {
  if (m.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [S, c] : m) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*" << theta_str(D, S);
  }
  return os.str();
}

std::map<ThetaSet, ModuleElement> dg_square_residual(const DgModule& D) {
  std::map<ThetaSet, ModuleElement> out;
  for (ThetaSet S = 0; S < (ThetaSet(1) << D.rank()); ++S) {
    ModuleElement r = D.reduce(D.d(D.d_generator(S)));
    if (!r.empty()) out.emplace(S, std::move(r));
  }
  return out;
}

PhiReport phi_chain_map_residual(int n, const std::optional<Poly>& image) {
  if (n < 2) throw Error(Errc::index_out_of_range, "phi needs n >= 2");
  PhiReport rep;
  rep.n = n;
  KoszulFactorization Kn = build_Mn(n);
  const RegistryPtr& reg = Kn.registry();
  KoszulFactorization Km = Kn;
  Km.rows.pop_back();
  DgModule Dn = to_dg_module(Kn), Dm = to_dg_module(Km);

  Poly P = Poly::constant(reg, 1);
  if (image) P = image->rebase(reg);
  else
    for (int i = 1; i < n; ++i) P *= p_poly(reg, i, n);

  for (ThetaSet S = 0; S < (ThetaSet(1) << (n - 1)); ++S) {
    ModuleElement lhs = Dn.d_generator(S);
    ModuleElement rhs = Dm.d_generator(S);
    ModuleElement diff;
    for (auto& [T, c] : lhs) add_to(diff, T, P * c);
    for (auto& [T, c] : rhs) add_to(diff, T, -(P * c));
    ModuleElement r = Dn.reduce(diff);
    if (!r.empty()) rep.residual.emplace(S, std::move(r));
  }

  std::vector<Poly> rel;
  for (int k = 1; k < n; ++k) rel.push_back(elementary(reg, k, y_vars(1, n - 1)) - elementary(reg, k, x_vars(1, n - 1)));
  rel.push_back(p_poly(reg, n, n));
  for (const Poly& g : rel)
    if (!Kn.base->contains(P * g)) rep.ill_defined.push_back(P * g);
  return rep;
}

}  // namespace hhh
