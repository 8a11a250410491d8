#include "hhh/groebner.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <tuple>

namespace hhh {

namespace {

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_greater(a, b); }
};

int max_total(const Poly& p) {
  int d = 0;
  for (const auto& t : p.terms()) d = std::max<int>(d, t.first.total);
  return d;
}

const Poly* find_reducer(const Monomial& m, const std::vector<Poly>& basis) {
  for (const Poly& g : basis)
    if (!g.is_zero() && g.lead_monomial().divides(m)) return &g;
  return nullptr;
}

}  // namespace

Poly reduce(const Poly& p, const std::vector<Poly>& basis) {
  std::map<Monomial, Rational, GrevlexGreater> work;
  for (const auto& t : p.terms()) work.emplace(t.first, t.second);
  std::vector<Poly::Term> rem;
  while (!work.empty()) {
    auto it = work.begin();
    Monomial m = it->first;
    Rational c = it->second;
    work.erase(it);
    const Poly* g = find_reducer(m, basis);
    if (!g) {
      rem.push_back({m, c});
      continue;
    }
    Monomial f = m.quotient(g->lead_monomial());
    Rational factor = c / g->lead_coeff();
    const auto& gt = g->terms();
    for (std::size_t k = 1; k < gt.size(); ++k) {
      auto [jt, inserted] = work.try_emplace(gt[k].first * f, 0);
      jt->second -= factor * gt[k].second;
      if (jt->second == 0) work.erase(jt);
    }
  }
  return Poly(p.registry(), std::move(rem));
}

std::vector<Poly> groebner_basis(const Ideal& ideal, const GroebnerOptions& opts) {
  std::vector<Poly> G;
  std::vector<int> sugar;

  struct Pair {
    int sugar;
    Monomial lcm;
    int i, j;
  };
  auto pair_less = [](const Pair& a, const Pair& b) {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    if (!(a.lcm == b.lcm)) return grevlex_greater(b.lcm, a.lcm);
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  };
  std::set<Pair, decltype(pair_less)> queue(pair_less);
  std::set<std::pair<int, int>> pending;

  auto add = [&](Poly h, int s) {
    h = h.monic();
    int k = static_cast<int>(G.size());
    for (int i = 0; i < k; ++i) {
      Monomial l = G[i].lead_monomial().lcm(h.lead_monomial());
      int si = sugar[i] + l.total - G[i].lead_monomial().total;
      int sk = s + l.total - h.lead_monomial().total;
      queue.insert({std::max(si, sk), l, i, k});
      pending.insert({i, k});
    }
    G.push_back(std::move(h));
    sugar.push_back(s);
  };

  for (const Poly& g : ideal.generators) {
    if (g.is_zero()) continue;
    tridegree_of(g);
    Poly r = reduce(g.rebase(ideal.reg), G);
    if (!r.is_zero()) add(r, max_total(g));
  }

  std::size_t processed = 0;
  while (!queue.empty()) {
    Pair p = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({p.i, p.j});
    const Monomial& li = G[p.i].lead_monomial();
    const Monomial& lj = G[p.j].lead_monomial();
    if (li.coprime(lj)) continue;
    bool chain = false;
    for (int k = 0; k < static_cast<int>(G.size()) && !chain; ++k) {
      if (k == p.i || k == p.j || !G[k].lead_monomial().divides(p.lcm)) continue;
      auto key = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      chain = !pending.count(key(p.i, k)) && !pending.count(key(p.j, k));
    }
    if (chain) continue;
    if (++processed > opts.spair_budget)
      throw Error(Errc::resource_limit, "S-pair budget of " + std::to_string(opts.spair_budget) + " exceeded");
    Poly s = G[p.i].mul_term(p.lcm.quotient(li), 1) - G[p.j].mul_term(p.lcm.quotient(lj), 1);
    Poly r = reduce(s, G);
    if (!r.is_zero()) add(r, p.sugar);
  }

  // minimalize, then tail-reduce
  std::vector<Poly> minimal;
  for (std::size_t a = 0; a < G.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < G.size() && !redundant; ++b) {
      if (a == b || !G[b].lead_monomial().divides(G[a].lead_monomial())) continue;
      redundant = !(G[a].lead_monomial() == G[b].lead_monomial()) || b < a;
    }
    if (!redundant) minimal.push_back(G[a]);
  }
  std::vector<Poly> reduced;
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<Poly> others;
    for (std::size_t b = 0; b < minimal.size(); ++b)
      if (b != a) others.push_back(minimal[b]);
    const auto& lead = minimal[a].terms().front();
    Poly head = Poly::monomial(ideal.reg, lead.first, lead.second);
    reduced.push_back((head + reduce(minimal[a] - head, others)).monic());
  }
  std::sort(reduced.begin(), reduced.end(),
            [](const Poly& x, const Poly& y) { return grevlex_greater(y.lead_monomial(), x.lead_monomial()); });
  return reduced;
}

Quotient::Quotient(Ideal ideal, TriDegree shift, const GroebnerOptions& opts) : ideal_(std::move(ideal)), shift_(shift) {
  std::vector<Poly> gens;
  for (const Poly& g : ideal_.generators)
    if (!g.is_zero()) gens.push_back(g.rebase(ideal_.reg));
  ideal_.generators = std::move(gens);
  basis_ = groebner_basis(ideal_, opts);
}

Poly Quotient::normal_form(const Poly& p) const { return reduce(p.rebase(ideal_.reg), basis_); }

Poly normal_form(const Poly& p, const Quotient& q) { return q.normal_form(p); }

std::vector<Poly> non_members(const Ideal& of, const Quotient& in) {
  std::vector<Poly> out;
  for (const Poly& g : of.generators)
    if (!in.contains(g)) out.push_back(g);
  return out;
}

bool ideal_equal(const Ideal& a, const Ideal& b, const GroebnerOptions& opts) {
  if (!(*a.reg == *b.reg)) throw Error(Errc::registry_mismatch, "ideals live in different registries");
  Quotient qa(a, {}, opts), qb(b, {}, opts);
  return non_members(b, qa).empty() && non_members(a, qb).empty();
}

DimTable hilbert_function_enumerate(const Quotient& quot, const Window& w) {
  DimTable out;
  if (w.empty()) return out;
  const Registry& reg = *quot.registry();
  Window box = w.shifted(-quot.shift());

  std::vector<std::size_t> order;
  for (std::size_t k = 0; k < reg.size(); ++k) {
    const TriDegree& d = reg[k].degree;
    if (d.t < 0 || d.a < 0 || (d.t == 0 && d.a == 0 && d.q <= 0))
      throw Error(Errc::infinite_slice, "variable " + reg[k].name + " makes graded pieces infinite");
    if (d.t > 0 || d.a > 0) order.push_back(k);
  }
  std::size_t nbounded = order.size();
  for (std::size_t k = 0; k < reg.size(); ++k)
    if (reg[k].degree.t == 0 && reg[k].degree.a == 0) order.push_back(k);

  std::vector<Monomial> leads;
  for (const Poly& g : quot.basis()) leads.push_back(g.lead_monomial());
  // leads involving each variable
  std::vector<std::vector<const Monomial*>> by_var(reg.size());
  for (const Monomial& l : leads)
    for (std::size_t k = 0; k < reg.size(); ++k)
      if (l.e[k]) by_var[k].push_back(&l);
  bool unit_ideal = std::any_of(leads.begin(), leads.end(), [](const Monomial& l) { return l.is_one(); });
  if (unit_ideal) return out;

  Monomial m;
  std::function<void(std::size_t, TriDegree)> rec = [&](std::size_t pos, TriDegree d) {
    if (pos == order.size()) {
      if (box.contains(d)) ++out[d + quot.shift()];
      return;
    }
    std::size_t k = order[pos];
    const TriDegree& dk = reg[k].degree;
    bool pure = pos >= nbounded;
    for (int e = 0;; ++e) {
      if (e > 0) {
        d += dk;
        if (pure ? d.q > box.qmax : (d.t > box.tmax || d.a > box.amax)) break;
        m.set(k, e);
        bool divisible = false;
        for (const Monomial* l : by_var[k])
          if (l->divides(m)) {
            divisible = true;
            break;
          }
        if (divisible) break;
      }
      rec(pos + 1, d);
    }
    m.set(k, 0);
  };
  rec(0, TriDegree{});
  return out;
}

namespace {

void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.total != b.total) return a.total < b.total;
    return a.e < b.e;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const Monomial& g : gens) {
    bool redundant = false;
    for (const Monomial& h : out)
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  gens = std::move(out);
}

void add_scaled(DimTable& acc, const DimTable& t, const TriDegree& shift, long long c) {
  for (const auto& [d, v] : t) {
    auto& slot = acc[d + shift];
    slot += c * v;
    if (slot == 0) acc.erase(d + shift);
  }
}

DimTable numerator_rec(const Registry& reg, std::vector<Monomial> gens) {
  minimalize(gens);
  DimTable out;
  if (gens.empty()) {
    out[{}] = 1;
    return out;
  }
  if (gens.front().is_one()) return out;
  // pairwise coprime generators: product of (1 - T^deg g)
  Monomial support;
  bool coprime = true;
  for (const Monomial& g : gens) {
    if (!support.coprime(g)) {
      coprime = false;
      break;
    }
    support = support * g;
  }
  if (coprime) {
    out[{}] = 1;
    for (const Monomial& g : gens) {
      DimTable next = out;
      add_scaled(next, out, degree_of(reg, g), -1);
      out = std::move(next);
    }
    return out;
  }
  // pivot on the variable occurring in most generators
  std::size_t best = 0;
  int best_count = -1;
  for (std::size_t k = 0; k < reg.size(); ++k) {
    int c = 0;
    for (const Monomial& g : gens) c += g.e[k] > 0;
    if (c > best_count) {
      best_count = c;
      best = k;
    }
  }
  int e = 255;
  for (const Monomial& g : gens)
    if (g.e[best]) e = std::min<int>(e, g.e[best]);
  Monomial p;
  p.set(best, e);
  // N(M) = N(M + (p)) + T^deg p N(M : p)
  std::vector<Monomial> sum, colon;
  for (const Monomial& g : gens) {
    if (g.e[best] < e) sum.push_back(g);
    Monomial h = g;
    h.set(best, std::max(0, g.e[best] - e));
    colon.push_back(h);
  }
  sum.push_back(p);
  out = numerator_rec(reg, std::move(sum));
  add_scaled(out, numerator_rec(reg, std::move(colon)), degree_of(reg, p), 1);
  return out;
}

}  // namespace

DimTable hilbert_numerator(const Registry& reg, std::vector<Monomial> monomials) {
  return numerator_rec(reg, std::move(monomials));
}

DimTable hilbert_function(const Quotient& quot, const Window& w) {
  if (w.empty()) return {};
  const Registry& reg = *quot.registry();
  std::vector<Monomial> leads;
  for (const Poly& g : quot.basis()) leads.push_back(g.lead_monomial());
  DimTable num = hilbert_numerator(reg, std::move(leads));
  std::vector<TriDegree> den;
  for (const auto& v : reg.variables()) den.push_back(v.degree);
  return shift_table(expand_rational(num, den, w.shifted(-quot.shift())), quot.shift());
}

PoincareSeries free_ring_series(const Registry& reg) {
  PoincareSeries s;
  for (const auto& v : reg.variables()) s.denominators.push_back(v.degree);
  return s;
}

RegularityVerdict certify_regular_sequence(const std::vector<Poly>& seq, const RegistryPtr& reg, const Window& w,
                                           const GroebnerOptions& opts) {
  RegularityVerdict v;
  v.window = w;
  PoincareSeries s = free_ring_series(*reg);
  for (const Poly& f : seq) {
    if (f.is_zero()) return v;
    s.numerators.push_back({tridegree_of(f), -1});
  }
  Quotient q(Ideal{reg, seq}, {}, opts);
  DimTable actual = hilbert_function(q, w);
  DimTable expected = expand_series(s, w);
  std::set<TriDegree> keys;
  for (const auto& kv : actual) keys.insert(kv.first);
  for (const auto& kv : expected) keys.insert(kv.first);
  for (const TriDegree& d : keys) {
    long long a = actual.count(d) ? actual.at(d) : 0;
    long long e = expected.count(d) ? expected.at(d) : 0;
    if (a != e) {
      v.first_failure = d;
      v.expected = e;
      v.actual = a;
      return v;
    }
  }
  v.accept = true;
  return v;
}

}  // namespace hhh
