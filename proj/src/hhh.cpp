#include "hhh/hhh.hpp"

#include <functional>

#include "hhh/schubert.hpp"

namespace hhh {

Permutation canonical_cycle_form(const Permutation& w) { return Permutation::special(w.cycle_type()); }

std::vector<int> block_ends(const Permutation& w) {
  if (!(w == canonical_cycle_form(w))) throw Error(Errc::invalid_permutation, w.str() + " is not in special form");
  std::vector<int> ends;
  int pos = 0;
  for (int len : w.cycle_type()) {
    pos += len;
    ends.push_back(pos);
  }
  return ends;
}

KoszulFactorization hh0_specialize(const KoszulFactorization& K) {
  const Registry& src = *K.registry();
  int n = src.n();
  RegistryPtr target = xu_registry(n);
  Assignment sub = y_to_x(n, target);
  KoszulFactorization out;
  out.base = free_quotient(target);
  out.global_shift = K.global_shift + TriDegree{n * (n - 1), 0, 0};
  for (const auto& r : K.rows)
    out.rows.push_back({substitute(r.a, sub, target), substitute(r.b, sub, target), r.shift, r.label});
  return out;
}

BlockSimplified block_simplify(const KoszulFactorization& K, const Permutation& w) {
  std::vector<int> ends = block_ends(w);
  if (static_cast<int>(K.rows.size()) != w.n()) throw Error(Errc::invalid_permutation, "size mismatch");
  BlockSimplified out;
  out.K = K;
  int start = 1;
  for (int L : ends) {
    for (int k = start; k < L; ++k) {
      out.K = row_transform(out.K, k, L, Poly::constant(K.registry(), -1));
      out.trace.push_back({"row_transform",
                           {{"i", std::to_string(k)}, {"j", std::to_string(L)}, {"lambda", "-1"}},
                           out.K,
                           potential(out.K)});
      out.K = scale_row(out.K, k, -1);
      out.trace.push_back({"scale_row", {{"i", std::to_string(k)}, {"lambda", "-1"}}, out.K, potential(out.K)});
      out.alpha_rows.push_back(k);
    }
    out.b_rows.push_back(L);
    start = L + 1;
  }
  const RegistryPtr& reg = out.K.registry();
  for (int k : out.alpha_rows) {
    const KoszulRow& r = out.K.rows[k - 1];
    if (!(r.a == q_poly(reg, k, k + 1)) || !r.b.is_zero())
      throw Error(Errc::internal, "block simplification did not reach (alpha | 0) in row " + std::to_string(k));
  }
  for (int L : out.b_rows)
    if (!out.K.rows[L - 1].a.is_zero())
      throw Error(Errc::internal, "block simplification left a nonzero entry in row " + std::to_string(L));
  return out;
}

StableHomologyPresentation stable_homology_presentation(int n, const Permutation& w, const GroebnerOptions& opts) {
  if (n < 1 || w.n() != n) throw Error(Errc::invalid_permutation, "permutation does not act on 1.." + std::to_string(n));
  Permutation ws = canonical_cycle_form(w);
  BlockSimplified bs = block_simplify(hh0_specialize(build_Mn(n, ws)), ws);
  StableHomologyPresentation p;
  p.n = n;
  p.w = ws;
  p.cycle_type = ws.cycle_type();
  p.unit_shift = bs.K.global_shift;
  for (int k : bs.alpha_rows) {
    p.sequence.push_back(bs.K.rows[k - 1].a);
    p.unit_shift += bs.K.rows[k - 1].shift;
  }
  for (int L : bs.b_rows) p.sequence.push_back(bs.K.rows[L - 1].b);
  p.ring = std::make_shared<const Quotient>(Ideal{bs.K.registry(), p.sequence}, p.unit_shift, opts);
  for (int i = 1; i <= n; ++i) p.exterior.push_back({-2 * i, 0, 1});
  return p;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  if (!(*a.reg == *b.reg)) throw Error(Errc::registry_mismatch, "ideals live in different registries");
  Ideal s = a;
  for (const Poly& g : b.generators) s.generators.push_back(g.rebase(a.reg));
  return s;
}

Ideal J2_ideal(int n, RegistryPtr reg) {
  if (!reg) reg = xu_registry(n);
  Ideal J{reg, {}};
  for (int j = 1; j <= n; ++j) J.generators.push_back(b_poly(j, n, Permutation(n), reg));
  return J;
}

StableHomologyPresentation twisted_flag_presentation(const Permutation& w, const GroebnerOptions& opts) {
  int n = w.n();
  RegistryPtr reg = xu_registry(n);
  Ideal ideal = J2_ideal(n, reg);
  for (int i = 1; i <= n; ++i)
    if (w(i) != i) ideal.generators.push_back(q_poly(reg, i, w(i)));
  StableHomologyPresentation p;
  p.n = n;
  p.w = w;
  p.cycle_type = w.cycle_type();
  int r = static_cast<int>(p.cycle_type.size());
  p.unit_shift = TriDegree{-2, 1, 0} * (n - r);
  p.sequence = ideal.generators;
  p.ring = std::make_shared<const Quotient>(std::move(ideal), p.unit_shift, opts);
  for (int i = 1; i <= n; ++i) p.exterior.push_back({-2 * i, 0, 1});
  return p;
}

StableIdeals stable_ideals(const Permutation& w) {
  int n = w.n();
  std::vector<int> ends = block_ends(w);
  RegistryPtr reg = xu_registry(n);
  StableIdeals m{{reg, {}}, {reg, {}}, {reg, {}}, {reg, {}}, J2_ideal(n, reg)};
  std::vector<bool> is_end(n + 1, false);
  for (int e : ends) is_end[e] = true;
  for (int i = 1; i <= n; ++i) {
    if (!is_end[i]) m.I.generators.push_back(q_poly(reg, i, i + 1));
    m.Ip.generators.push_back(q_poly(reg, i, w(i)));
    Poly b = b_poly(i, n, w, reg);
    if (is_end[i]) m.J.generators.push_back(b);
    m.Jp.generators.push_back(b);
  }
  return m;
}

Window default_window(int n) { return {-2 * n * n - 10, 2 * n * n + 10, 0, 12, 0, n}; }

DimTable with_exterior(const DimTable& even, int n, const Window& w) {
  DimTable out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    TriDegree s;
    for (int i = 1; i <= n; ++i)
      if (mask >> (i - 1) & 1) s += TriDegree{-2 * i, 0, 1};
    for (const auto& [d, c] : even) {
      TriDegree e = d + s;
      if (w.contains(e)) out[e] += c;
    }
  }
  return out;
}

DimTable full_hhh(const StableHomologyPresentation& pres, const Window& w) {
  if (w.empty()) return {};
  int n = pres.n;
  Window even{w.qmin, w.qmax + n * (n + 1), w.tmin, w.tmax, 0, 0};
  return with_exterior(hilbert_function(*pres.ring, even), n, w);
}

// ---------------------------------------------------------------- flag ring

RegistryPtr e_registry(int n) { return RegistryBuilder(n).x().v().build(); }

std::vector<Poly> e_relations(int n) {
  RegistryPtr reg = e_registry(n);
  auto v = [&](int i, int j) { return i < j ? Poly::var(reg, v_name(i, j)) : Poly(reg); };
  std::vector<Poly> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back(q_poly(reg, i, j) * v(i, j) + v(i + 1, j) - v(i, j - 1));
  return out;
}

Quotient e_ring(int n, const GroebnerOptions& opts) { return Quotient(Ideal{e_registry(n), e_relations(n)}, {}, opts); }

bool EIsoReport::pass() const {
  auto all = [](const std::vector<bool>& v) {
    for (bool b : v)
      if (!b) return false;
    return true;
  };
  return all(forward_member) && all(backward_member) && hilbert_agree;
}

EIsoReport verify_E_isomorphism(int n, const Window& w, const GroebnerOptions& opts) {
  EIsoReport rep;
  rep.n = n;
  rep.window = w;
  RegistryPtr ureg = xu_registry(n);
  RegistryPtr vreg = e_registry(n);
  Quotient E = e_ring(n, opts);
  Ideal J = J2_ideal(n, ureg);
  Quotient QJ(J, {}, opts);

  Assignment fwd;
  for (int k = 1; k <= n; ++k)
    fwd.emplace(u_name(k), k == 1 ? Poly(vreg) : Poly::var(vreg, v_name(1, k)) * Rational(k % 2 ? 1 : -1));
  for (const Poly& g : J.generators) {
    rep.forward_images.push_back(substitute(g, fwd, vreg));
    rep.forward_member.push_back(E.contains(rep.forward_images.back()));
  }

  std::map<std::pair<int, int>, Poly> memo;
  std::function<Poly(int, int)> psi = [&](int i, int j) -> Poly {
    auto it = memo.find({i, j});
    if (it != memo.end()) return it->second;
    Poly r = i == 1 ? Poly::var(ureg, u_name(j)) * Rational(j % 2 ? 1 : -1)
                    : psi(i - 1, j - 1) - q_poly(ureg, i - 1, j) * psi(i - 1, j);
    memo.emplace(std::make_pair(i, j), r);
    return r;
  };
  Assignment bwd;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) bwd.emplace(v_name(i, j), psi(i, j));
  for (const Poly& r : e_relations(n)) {
    rep.backward_images.push_back(substitute(r, bwd, ureg));
    rep.backward_member.push_back(QJ.contains(rep.backward_images.back()));
  }

  rep.hilbert_E = hilbert_function(E, w);
  rep.hilbert_J = hilbert_function(QJ, w);
  rep.hilbert_agree = rep.hilbert_E == rep.hilbert_J;
  return rep;
}

}  // namespace hhh
