#include "hhh/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_map>

#include "hhh/schubert.hpp"
#include "hhh/sparse_rank.hpp"

namespace hhh {

namespace {

struct Elem {
  Monomial m;
  std::uint32_t gen;
  bool operator==(const Elem& o) const { return gen == o.gen && m == o.m; }
};

struct ElemHash {
  std::size_t operator()(const Elem& e) const noexcept { return MonomialHash{}(e.m) * 31 + e.gen; }
};

void check_variables(const Registry& reg) {
  for (const auto& v : reg.variables()) {
    const TriDegree& d = v.degree;
    if (d.t < 0 || d.a < 0 || (d.t == 0 && d.a == 0 && d.q <= 0))
      throw Error(Errc::infinite_slice, "variable " + v.name + " makes graded pieces infinite");
  }
}

/// Calls f(monomial, degree) for every monomial m with start + deg m inside
/// the box (bounded variables limited by t and a, the rest by q).
void enumerate_monomials(const Registry& reg, const TriDegree& start, const Window& box,
                         const std::function<void(const Monomial&, const TriDegree&)>& f) {
  std::vector<std::size_t> order;
  for (std::size_t k = 0; k < reg.size(); ++k)
    if (reg[k].degree.t > 0 || reg[k].degree.a > 0) order.push_back(k);
  std::size_t nbounded = order.size();
  for (std::size_t k = 0; k < reg.size(); ++k)
    if (reg[k].degree.t == 0 && reg[k].degree.a == 0) order.push_back(k);
  Monomial m;
  std::function<void(std::size_t, TriDegree)> rec = [&](std::size_t pos, TriDegree d) {
    if (pos == order.size()) {
      if (box.contains(d)) f(m, d);
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
      }
      rec(pos + 1, d);
    }
    m.set(k, 0);
  };
  if (start.t <= box.tmax && start.a <= box.amax) rec(0, start);
}

/// Smallest q of a chain element with t <= tmax and a <= amax.
int min_q(const FreeComplex& C, const Window& box) {
  const Registry& reg = *C.reg;
  int best = std::numeric_limits<int>::max();
  std::vector<std::size_t> bounded;
  for (std::size_t k = 0; k < reg.size(); ++k)
    if (reg[k].degree.t > 0 || reg[k].degree.a > 0) bounded.push_back(k);
  std::function<void(std::size_t, TriDegree)> rec = [&](std::size_t pos, TriDegree d) {
    if (pos == bounded.size()) {
      best = std::min(best, d.q);
      return;
    }
    const TriDegree& dk = reg[bounded[pos]].degree;
    for (TriDegree e = d; e.t <= box.tmax && e.a <= box.amax; e += dk) rec(pos + 1, e);
  };
  for (const TriDegree& g : C.degrees)
    if (g.t <= box.tmax && g.a <= box.amax) rec(0, g);
  return best;
}

/// Largest -q of a monomial in `vars` with t <= tspan and a <= aspan.
int max_neg_q(const Registry& reg, const std::vector<std::size_t>& vars, int tspan, int aspan) {
  int best = 0;
  std::function<void(std::size_t, TriDegree)> rec = [&](std::size_t pos, TriDegree d) {
    if (pos == vars.size()) {
      best = std::max(best, -d.q);
      return;
    }
    const TriDegree& dk = reg[vars[pos]].degree;
    if (dk.t == 0 && dk.a == 0) {
      rec(pos + 1, d);
      return;
    }
    for (TriDegree e = d; e.t <= tspan && e.a <= aspan; e += dk) rec(pos + 1, e);
  };
  rec(0, TriDegree{});
  return best;
}

FreeComplex map_complex(const FreeComplex& C, const RegistryPtr& target, const Assignment& sub) {
  FreeComplex out{target, C.degrees, {}};
  for (const auto& row : C.d) {
    std::vector<std::pair<std::size_t, Poly>> r;
    for (const auto& [g, p] : row) {
      Poly q = substitute(p, sub, C.reg).rebase(target);
      if (!q.is_zero()) r.push_back({g, q});
    }
    out.d.push_back(std::move(r));
  }
  return out;
}

bool involves_var(const FreeComplex& C, std::size_t k) {
  for (const auto& row : C.d)
    for (const auto& [g, p] : row)
      if (p.involves(k)) return true;
  return false;
}

/// x_i = x_1 - (alpha_1 + ... + alpha_{i-1}) when that removes x_1 from the differential.
FreeComplex difference_coordinates(const FreeComplex& C) {
  const Registry& reg = *C.reg;
  std::vector<std::size_t> xs;
  for (int i = 1;; ++i) {
    auto k = reg.find(x_name(i));
    if (!k) break;
    xs.push_back(*k);
  }
  if (xs.size() < 2) return C;
  for (std::size_t i = 1; i <= xs.size(); ++i)
    if (reg.contains(alpha_name(static_cast<int>(i)))) return C;
  std::vector<Variable> vars;
  for (std::size_t k = 0; k < reg.size(); ++k) {
    const Variable& v = reg[k];
    if (v.kind == VarKind::x && v.i >= 2 && v.i <= static_cast<int>(xs.size()))
      vars.push_back({alpha_name(v.i - 1), VarKind::alpha, v.i - 1, 0, v.degree});
    else
      vars.push_back(v);
  }
  RegistryPtr target = std::make_shared<const Registry>(reg.n(), vars);
  std::vector<Variable> both = reg.variables();
  for (std::size_t i = 1; i < xs.size(); ++i) both.push_back({alpha_name(static_cast<int>(i)), VarKind::alpha, static_cast<int>(i), 0, reg[xs[i]].degree});
  RegistryPtr big = std::make_shared<const Registry>(reg.n(), both);
  Assignment sub;
  Poly acc = Poly::var(big, x_name(1));
  for (std::size_t i = 2; i <= xs.size(); ++i) {
    acc -= Poly::var(big, alpha_name(static_cast<int>(i - 1)));
    sub.emplace(x_name(static_cast<int>(i)), acc);
  }
  FreeComplex out{target, C.degrees, {}};
  for (const auto& row : C.d) {
    std::vector<std::pair<std::size_t, Poly>> r;
    for (const auto& [g, p] : row) {
      Poly q = substitute(p.rebase(big), sub, big).rebase(target);
      if (!q.is_zero()) r.push_back({g, q});
    }
    out.d.push_back(std::move(r));
  }
  if (involves_var(out, target->index(x_name(1)))) return C;
  return out;
}

/// Integer gradings respected by d (beyond none): rows are weight vectors over
/// (variables, generators, delta).
std::vector<std::vector<long long>> compatible_gradings(const FreeComplex& C) {
  std::size_t V = C.reg->size(), G = C.degrees.size(), U = V + G + 1;
  // incremental row echelon form over Q
  std::vector<std::vector<Rational>> rows;
  std::vector<std::size_t> lead;
  auto insert = [&](std::vector<Rational> eq) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (eq[lead[r]] == 0) continue;
      Rational f = eq[lead[r]];
      for (std::size_t k = 0; k < U; ++k) eq[k] -= f * rows[r][k];
    }
    std::size_t l = 0;
    while (l < U && eq[l] == 0) ++l;
    if (l == U) return;
    Rational inv = 1 / eq[l];
    for (auto& v : eq) v *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r][l] == 0) continue;
      Rational f = rows[r][l];
      for (std::size_t k = 0; k < U; ++k) rows[r][k] -= f * eq[k];
    }
    rows.push_back(std::move(eq));
    lead.push_back(l);
  };
  std::set<std::vector<int>> seen;
  for (std::size_t g = 0; g < G; ++g)
    for (const auto& [h, p] : C.d[g])
      for (const auto& [m, c] : p.terms()) {
        std::vector<int> key(U, 0);
        for (std::size_t k = 0; k < V; ++k) key[k] = m.e[k];
        key[V + h] += 1;
        key[V + g] -= 1;
        key[U - 1] = -1;
        if (!seen.insert(key).second) continue;
        std::vector<Rational> eq(U);
        for (std::size_t k = 0; k < U; ++k) eq[k] = key[k];
        insert(std::move(eq));
        if (rows.size() == U) return {};
      }
  std::vector<bool> is_lead(U, false);
  for (std::size_t l : lead) is_lead[l] = true;
  std::vector<std::vector<long long>> out;
  for (std::size_t f = 0; f < U; ++f) {
    if (is_lead[f]) continue;
    std::vector<Rational> v(U, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < rows.size(); ++r) v[lead[r]] = -rows[r][f];
    mpz_class den = 1;
    for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    std::vector<long long> iv;
    for (const auto& x : v) {
      mpz_class z = x.get_num() * (den / x.get_den());
      if (!z.fits_slong_p()) throw Error(Errc::resource_limit, "grading weight too large");
      iv.push_back(z.get_si());
    }
    out.push_back(std::move(iv));
  }
  return out;
}

DimTable homology_core(const FreeComplex& C, const Window& w, const OracleOptions& opts, bool split, OracleStats* stats) {
  DimTable out;
  if (w.empty()) return out;
  const Registry& reg = *C.reg;
  std::size_t V = reg.size();
  std::vector<std::vector<long long>> grads;
  if (split) grads = compatible_gradings(C);
  if (stats) stats->extra_gradings = grads.size();

  Window box{w.qmin, w.qmax, w.tmin - 1, w.tmax + 1, w.amin, w.amax};
  int nt = box.tmax - box.tmin + 1;
  std::map<std::vector<long long>, std::vector<std::vector<Elem>>> buckets;
  for (std::uint32_t g = 0; g < C.degrees.size(); ++g) {
    enumerate_monomials(reg, C.degrees[g], box, [&](const Monomial& m, const TriDegree& d) {
      std::vector<long long> key{d.q, d.a};
      for (const auto& gr : grads) {
        long long wgt = gr[V + g];
        for (std::size_t k = 0; k < V; ++k)
          if (m.e[k]) wgt += gr[k] * m.e[k];
        key.push_back(wgt - gr.back() * d.t);
      }
      auto& b = buckets[key];
      if (b.empty()) b.resize(nt);
      b[d.t - box.tmin].push_back({m, g});
    });
  }

  std::vector<const std::pair<const std::vector<long long>, std::vector<std::vector<Elem>>>*> work;
  for (const auto& kv : buckets) {
    work.push_back(&kv);
    for (const auto& c : kv.second) {
      if (c.size() > opts.max_slice)
        throw Error(Errc::resource_limit, "slice of dimension " + std::to_string(c.size()) + " exceeds the limit");
      if (stats) {
        stats->max_dim = std::max(stats->max_dim, c.size());
        stats->total_dim += c.size();
      }
    }
  }
  if (stats) stats->columns = work.size();

  std::vector<std::vector<std::pair<int, long long>>> results(work.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> matrices{0};
  std::mutex err_mu;
  std::exception_ptr err;

  auto process = [&](std::size_t idx) {
    const auto& chains = work[idx]->second;
    std::vector<std::size_t> rank(nt, 0);  // rank[k] = rank of d from slot k to k+1
    for (int k = 0; k + 1 < nt; ++k) {
      const auto& src = chains[k];
      const auto& dst = chains[k + 1];
      if (src.empty() || dst.empty()) continue;
      std::unordered_map<Elem, std::uint32_t, ElemHash> index;
      index.reserve(dst.size() * 2);
      for (std::uint32_t r = 0; r < dst.size(); ++r) index.emplace(dst[r], r);
      SparseIntMatrix M;
      M.rows = dst.size();
      M.cols.reserve(src.size());
      std::map<std::uint32_t, Rational> col;
      for (const Elem& e : src) {
        col.clear();
        for (const auto& [h, p] : C.d[e.gen])
          for (const auto& [mono, c] : p.terms()) {
            auto it = index.find(Elem{e.m * mono, static_cast<std::uint32_t>(h)});
            if (it == index.end()) throw Error(Errc::internal, "differential leaves its slice");
            col[it->second] += c;
          }
        mpz_class den = 1;
        for (const auto& [r, c] : col) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
        std::vector<std::pair<std::uint32_t, mpz_class>> v;
        for (const auto& [r, c] : col)
          if (c != 0) v.push_back({r, c.get_num() * (den / c.get_den())});
        M.cols.push_back(std::move(v));
      }
      rank[k] = exact_rank(M);
      ++matrices;
    }
    for (int k = 1; k + 1 < nt; ++k) {
      long long h = static_cast<long long>(chains[k].size()) - static_cast<long long>(rank[k]) -
                    static_cast<long long>(rank[k - 1]);
      if (h < 0) throw Error(Errc::internal, "negative homology");
      if (h) results[idx].push_back({box.tmin + k, h});
    }
  };

  auto worker = [&] {
    while (true) {
      std::size_t idx = next++;
      if (idx >= work.size()) return;
      try {
        process(idx);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!err) err = std::current_exception();
        next = work.size();
        return;
      }
    }
  };
  int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (err) std::rethrow_exception(err);
  if (stats) stats->matrices += matrices;

  for (std::size_t idx = 0; idx < work.size(); ++idx) {
    const auto& key = work[idx]->first;
    for (const auto& [t, h] : results[idx]) out[TriDegree{static_cast<int>(key[0]), t, static_cast<int>(key[1])}] += h;
  }
  return out;
}

}  // namespace

FreeComplex koszul_complex(const KoszulFactorization& K) {
  if (!K.base->ideal().generators.empty())
    throw Error(Errc::internal, "the oracle needs a factorization over a free polynomial ring");
  DgModule D = to_dg_module(K);
  FreeComplex C{K.registry(), {}, {}};
  std::size_t count = std::size_t(1) << D.rank();
  for (ThetaSet S = 0; S < count; ++S) {
    TriDegree deg = K.global_shift;
    for (std::size_t p = 0; p < D.rank(); ++p)
      if (S >> p & 1) deg += K.rows[p].shift;
    C.degrees.push_back(deg);
    std::vector<std::pair<std::size_t, Poly>> row;
    for (auto& [T, c] : D.d_generator(S)) row.push_back({T, c});
    C.d.push_back(std::move(row));
  }
  return C;
}

DimTable free_complex_homology(const FreeComplex& C, const Window& w, const OracleOptions& opts, OracleStats* stats) {
  check_variables(*C.reg);
  if (w.empty()) return {};
  if (!opts.reduce) return homology_core(C, w, opts, false, stats);

  FreeComplex D = difference_coordinates(C);
  const Registry& reg = *D.reg;
  std::vector<std::size_t> inert;
  std::vector<Variable> kept;
  for (std::size_t k = 0; k < reg.size(); ++k) {
    if (involves_var(D, k)) kept.push_back(reg[k]);
    else inert.push_back(k);
  }
  if (inert.empty()) return homology_core(D, w, opts, true, stats);

  RegistryPtr small = std::make_shared<const Registry>(reg.n(), kept);
  FreeComplex E = map_complex(D, small, {});
  std::vector<TriDegree> den;
  for (std::size_t k : inert) {
    den.push_back(reg[k].degree);
    if (stats) stats->inert.push_back(reg[k].name);
  }
  int tlo = w.tmax, alo = w.amax;
  for (const TriDegree& g : E.degrees) {
    tlo = std::min(tlo, g.t);
    alo = std::min(alo, g.a);
  }
  Window inner{min_q(E, w), w.qmax + max_neg_q(reg, inert, w.tmax - tlo, w.amax - alo), tlo, w.tmax, alo, w.amax};
  DimTable h = homology_core(E, inner, opts, true, stats);
  return expand_rational(h, den, w);
}

DimTable bidegree_homology(const KoszulFactorization& K, const Window& w, const OracleOptions& opts, OracleStats* stats) {
  return free_complex_homology(koszul_complex(K), w, opts, stats);
}

DimTable chain_dimensions(const FreeComplex& C, const Window& w) {
  check_variables(*C.reg);
  DimTable out;
  for (const TriDegree& g : C.degrees)
    enumerate_monomials(*C.reg, g, w, [&](const Monomial&, const TriDegree& d) { ++out[d]; });
  return out;
}

bool slice_d_squared_zero(const FreeComplex& C, const Window& w) {
  check_variables(*C.reg);
  bool ok = true;
  for (std::uint32_t g = 0; g < C.degrees.size() && ok; ++g) {
    enumerate_monomials(*C.reg, C.degrees[g], w, [&](const Monomial& m, const TriDegree&) {
      if (!ok) return;
      std::unordered_map<Elem, Rational, ElemHash> once, twice;
      for (const auto& [h, p] : C.d[g])
        for (const auto& [mono, c] : p.terms()) once[Elem{m * mono, static_cast<std::uint32_t>(h)}] += c;
      for (const auto& [e, c] : once) {
        if (c == 0) continue;
        for (const auto& [h, p] : C.d[e.gen])
          for (const auto& [mono, c2] : p.terms()) twice[Elem{e.m * mono, static_cast<std::uint32_t>(h)}] += c * c2;
      }
      for (const auto& [e, c] : twice)
        if (c != 0) ok = false;
    });
  }
  return ok;
}

FreeComplex explicit_complex(ExplicitComplex which, int tmax) {
  FreeComplex C;
  if (which == ExplicitComplex::P2 || which == ExplicitComplex::sP2) {
    C.reg = x_registry(2);
    Poly alpha = q_poly(C.reg, 2, 1);
    int top = std::max(0, tmax + 1);
    for (int k = 0; k <= top; ++k) {
      C.degrees.push_back({-2 * k, k, 0});
      bool nonzero = (which == ExplicitComplex::P2) ? (k % 2 == 1) : (k % 2 == 0);
      std::vector<std::pair<std::size_t, Poly>> row;
      if (k < top && nonzero) row.push_back({static_cast<std::size_t>(k + 1), alpha});
      C.d.push_back(std::move(row));
    }
    return C;
  }
  C.reg = x_registry(3);
  Poly q13 = q_poly(C.reg, 1, 3), q32 = q_poly(C.reg, 3, 2);
  for (int i = 0; 2 * i <= tmax + 1; ++i)
    for (int j = 0; 2 * i + 2 * j <= tmax + 1; ++j) {
      TriDegree s{-4 * i - 6 * j, 2 * i + 2 * j, 0};
      std::size_t base = C.degrees.size();
      bool top1 = s.t + 1 <= tmax + 1, top2 = s.t + 2 <= tmax + 1;
      C.degrees.push_back(s);
      C.d.push_back({});
      if (!top1) continue;
      C.degrees.push_back(s + TriDegree{-2, 1, 0});
      C.degrees.push_back(s + TriDegree{-2, 1, 0});
      C.d[base] = {{base + 1, q13}, {base + 2, q32}};
      C.d.push_back({});
      C.d.push_back({});
      if (!top2) continue;
      C.degrees.push_back(s + TriDegree{-4, 2, 0});
      C.d.push_back({});
      C.d[base + 1] = {{base + 3, -q32}};
      C.d[base + 2] = {{base + 3, q13}};
    }
  return C;
}

DimTable explicit_complex_homology(ExplicitComplex which, const Window& w, const OracleOptions& opts) {
  if (w.empty()) return {};
  return free_complex_homology(explicit_complex(which, w.tmax), w, opts);
}

CompareReport compare_tables(const DimTable& expected, const DimTable& actual, const Window& w) {
  CompareReport rep;
  rep.window = w;
  std::set<TriDegree> keys;
  for (const auto& kv : expected)
    if (w.contains(kv.first)) keys.insert(kv.first);
  for (const auto& kv : actual)
    if (w.contains(kv.first)) keys.insert(kv.first);
  for (const TriDegree& d : keys) {
    long long e = expected.count(d) ? expected.at(d) : 0;
    long long a = actual.count(d) ? actual.at(d) : 0;
    if (e == a) continue;
    rep.pass = false;
    ++rep.mismatch_count;
    if (rep.mismatches.size() < 10) rep.mismatches.push_back({d, e, a});
  }
  return rep;
}

CompareReport compare(const DimTable& table, const PoincareSeries& series, const Window& w) {
  return compare_tables(expand_series(series, w), table, w);
}

}  // namespace hhh
