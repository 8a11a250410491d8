// Acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <map>
#include <numeric>
#include <optional>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hhh/hhh.hpp"
#include "hhh/json_io.hpp"
#include "hhh/oracle.hpp"
#include "hhh/schubert.hpp"
#include "hhh/verify.hpp"
#include "helpers.hpp"

using namespace hhh;
using namespace hhh::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

Outcome identities() {
  Outcome o;
  for (int n = 1; n <= 6; ++n)
    for (const auto& c : identity_suite(n))
      if (!c.pass) o.fail(c.name + " " + c.detail);
  return o;
}

Outcome dg_consistency() {
  Outcome o;
  for (int n = 1; n <= 5; ++n)
    for (const auto& ct : partitions(n)) {
      Permutation w = Permutation::special(ct);
      if (!dg_square_residual(to_dg_module(build_Mn(n, w))).empty()) o.fail("d^2 != 0 for n=" + std::to_string(n) + " " + w.str());
    }
  for (int n = 2; n <= 4; ++n)
    if (!phi_chain_map_residual(n).zero()) o.fail("phi is not a chain map for n=" + std::to_string(n));
  return o;
}

Outcome mf_reductions() {
  Outcome o;
  for (int n : {2, 3}) {
    auto trace = mf_simplify(n);
    for (const auto& rec : trace)
      if (!rec.potential.is_zero()) o.fail("potential changed at move " + rec.move);
    const KoszulFactorization& K = trace.back().result;
    const RegistryPtr& reg = K.registry();
    if (reg->contains(u_name(1))) o.fail("u1 still present for n=" + std::to_string(n));
    std::vector<std::pair<Poly, Poly>> want{{P(reg, "y2 - x2"), P(reg, "(y1 - x2)*u2")}};
    if (n == 3)
      want.push_back({P(reg, "y3 - x3"), P(reg, "((y1 - x2) + (y2 - x3))*u2 + (y1 - x3)*(y2 - x3)*u3")});
    if (K.rows.size() != want.size()) {
      o.fail("wrong number of rows for n=" + std::to_string(n));
      continue;
    }
    for (std::size_t k = 0; k < want.size(); ++k) {
      Poly a = K.base->normal_form(K.rows[k].a - want[k].first);
      Poly b = K.base->normal_form(K.rows[k].b - want[k].second);
      if (!a.is_zero() || !b.is_zero()) o.fail("endpoint row " + std::to_string(k + 1) + " differs for n=" + std::to_string(n));
    }
    std::string pinned = read_file(std::string(HHH_FIXTURE_DIR) + "/mf_simplify_n" + std::to_string(n) + ".json");
    if (to_json(trace).dump(2) + "\n" != pinned) o.fail("trace differs from the pinned fixture for n=" + std::to_string(n));
  }
  return o;
}

Outcome stable_ideal_checks() {
  Outcome o;
  Window w{-20, 20, 0, 10, 0, 0};
  for (int n = 1; n <= 4; ++n)
    for (const auto& ct : partitions(n)) {
      Permutation pw = Permutation::special(ct);
      StableIdeals m = stable_ideals(pw);
      if (!ideal_equal(ideal_sum(m.I, m.J), ideal_sum(m.Ip, m.Jpp))) o.fail("I+J != I'+J'' for " + pw.str());
      std::vector<Poly> seq = m.I.generators;
      for (const Poly& b : m.J.generators) seq.push_back(b);
      RegularityVerdict v = certify_regular_sequence(seq, m.I.reg, w);
      if (!v.accept) o.fail("sequence for " + pw.str() + " not certified regular");
    }
  return o;
}

Outcome flag_ring() {
  Outcome o;
  Window w{-12, 12, 0, 8, 0, 0};
  for (int n = 1; n <= 3; ++n)
    if (!verify_E_isomorphism(n, w).pass()) o.fail("E isomorphism fails for n=" + std::to_string(n));
  auto rel = e_relations(2);
  RegistryPtr reg = e_registry(2);
  if (rel.size() != 1 || !(rel[0] == P(reg, "(x1 - x2)*v12"))) o.fail("n=2 relation is not (x1-x2)v12");
  return o;
}

Outcome poincare_reproduction() {
  Outcome o;
  for (int n = 2; n <= 4; ++n)
    for (const auto& ct : partitions(n)) {
      Permutation pw = Permutation::special(ct);
      Window w{-16, 16, 0, 8, 0, n};
      Window even{-16, 16 + n * (n + 1), 0, 8, 0, 0};
      DimTable h = bidegree_homology(hh0_specialize(build_Mn(n, pw)), even);
      CompareReport r = compare(with_exterior(h, n, w), poincare_series(n, ct), w);
      if (!r.pass) o.fail(std::to_string(r.mismatch_count) + " mismatches for " + pw.str());
    }
  return o;
}

Outcome worked_examples() {
  Outcome o;
  Window w{-20, 20, 0, 10, 0, 0};
  TriDegree x{2, 0, 0};
  {
    auto pres = stable_homology_presentation(2, Permutation(2));
    // Q[x1, alpha, u2] / (alpha u2)
    DimTable want = count_monomials({x, x, u_degree(2)}, [](const std::vector<int>& e) { return e[1] == 0 || e[2] == 0; },
                                    {}, w);
    if (hilbert_function(*pres.ring, w) != want) o.fail("n=2 identity ring");
  }
  {
    auto pres = stable_homology_presentation(2, Permutation::parse("(1 2)", 2));
    if (pres.unit_shift != TriDegree{-2, 1, 0}) o.fail("n=2 transposition shift");
    DimTable want = count_monomials({x, u_degree(2)}, all_monomials, {-2, 1, 0}, w);
    if (hilbert_function(*pres.ring, w) != want) o.fail("n=2 transposition ring");
  }
  {
    auto pres = stable_homology_presentation(3, Permutation::parse("(1 2 3)", 3));
    if (pres.unit_shift != TriDegree{-4, 2, 0}) o.fail("n=3 three-cycle shift");
    DimTable want =
        count_monomials({x, u_degree(2), u_degree(3)}, all_monomials, {-4, 2, 0}, w);
    if (hilbert_function(*pres.ring, w) != want) o.fail("n=3 three-cycle ring");
    std::vector<TriDegree> xi{{-2, 0, 1}, {-4, 0, 1}, {-6, 0, 1}};
    if (pres.exterior != xi) o.fail("n=3 exterior degrees");
  }
  return o;
}

Outcome conjugacy() {
  Outcome o;
  std::mt19937 rng(20240611);
  for (int n = 1; n <= 5; ++n) {
    Window w = default_window(n);
    std::map<std::vector<int>, DimTable> reference;
    for (const auto& ct : partitions(n))
      reference[ct] = full_hhh(stable_homology_presentation(n, Permutation::special(ct)), w);
    std::vector<Permutation> perms;
    if (n <= 4) {
      perms = all_permutations(n);
    } else {
      // 20 random pairs w, s w s^-1
      for (int k = 0; k < 20; ++k) {
        std::vector<int> a(n), s(n);
        std::iota(a.begin(), a.end(), 1);
        std::iota(s.begin(), s.end(), 1);
        std::shuffle(a.begin(), a.end(), rng);
        std::shuffle(s.begin(), s.end(), rng);
        Permutation pw(a), ps(s);
        perms.push_back(pw);
        perms.push_back(ps * pw * ps.inverse());
      }
    }
    for (std::size_t k = 0; k < perms.size(); ++k) {
      DimTable t = full_hhh(twisted_flag_presentation(perms[k]), w);
      if (t != reference[perms[k].cycle_type()]) o.fail("table differs for " + perms[k].str());
      if (n == 5 && k % 2 == 1) {
        DimTable prev = full_hhh(twisted_flag_presentation(perms[k - 1]), w);
        if (t != prev) o.fail("pair differs: " + perms[k - 1].str() + " vs " + perms[k].str());
      }
    }
  }
  return o;
}

Outcome positivity() {
  Outcome o;
  for (int n = 1; n <= 4; ++n)
    for (const auto& ct : partitions(n)) {
      DimTable t = expand_series(poincare_series(n, ct), default_window(n));
      if (t.empty()) o.fail("empty expansion");
      for (const auto& [d, c] : t)
        if (c < 0) {
          std::ostringstream ss;
          ss << "negative coefficient at " << d;
          o.fail(ss.str());
        }
    }
  return o;
}

// ---------------------------------------------------------------- move invariance

struct Base {
  KoszulFactorization K;
  Window w;
  DimTable table;
};

KoszulFactorization x_only_factorization() {
  RegistryPtr reg = x_registry(3);
  auto row_b = [&](const char* b) {
    Poly p = P(reg, b);
    return KoszulRow{Poly(reg), p, tridegree_of(p) - kDiff, 0};
  };
  KoszulFactorization K{free_quotient(reg), {}, {}};
  K.rows.push_back(row_b("x1"));
  K.rows.push_back(row_b("x2^2 - x1*x3"));
  K.rows.push_back(row_b("x1*x2 + x3^2"));
  Poly a = P(reg, "x3");
  K.rows.push_back(KoszulRow{a, Poly(reg), kDiff - tridegree_of(a), 0});
  for (int k = 0; k < 4; ++k) K.rows[k].label = k + 1;
  return K;
}

Poly random_multiplier(const RegistryPtr& reg, const TriDegree& d, std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-2, 2);
  Poly out(reg);
  if (d == TriDegree{}) return Poly::constant(reg, coef(rng));
  // linear or quadratic forms in pure-q variables
  if (d.t != 0 || d.a != 0 || d.q <= 0 || d.q % 2) return out;
  std::vector<std::size_t> xs;
  for (std::size_t k = 0; k < reg->size(); ++k)
    if ((*reg)[k].degree == TriDegree{2, 0, 0}) xs.push_back(k);
  int deg = d.q / 2;
  std::function<void(std::size_t, int, Monomial)> rec = [&](std::size_t pos, int left, Monomial m) {
    if (left == 0) {
      out += Poly::monomial(reg, m, coef(rng));
      return;
    }
    if (pos == xs.size()) return;
    for (int e = 0; e <= left; ++e) {
      Monomial m2 = m;
      m2.set(xs[pos], e);
      rec(pos + 1, left - e, m2);
    }
  };
  rec(0, deg, Monomial{});
  return out;
}

std::optional<std::pair<int, std::string>> exclusion_candidate(const KoszulFactorization& K) {
  const Registry& reg = *K.registry();
  for (int r = 1; r <= static_cast<int>(K.rows.size()); ++r) {
    const KoszulRow& row = K.rows[r - 1];
    if (!row.a.is_zero() || row.b.is_zero()) continue;
    for (std::size_t v = 0; v < reg.size(); ++v) {
      Monomial vm;
      vm.set(v, 1);
      bool linear = false, other = false;
      for (const auto& [m, c] : row.b.terms()) {
        if (m == vm) linear = true;
        else if (m[v]) other = true;
      }
      if (linear && !other && !potential(K).involves(v)) return std::make_pair(r, reg[v].name);
    }
  }
  return std::nullopt;
}

Outcome move_invariance() {
  Outcome o;
  std::vector<Base> bases;
  for (int n : {2, 3})
    for (const auto& ct : partitions(n))
      bases.push_back({hh0_specialize(build_Mn(n, Permutation::special(ct))), {-12, 12, 0, 5, 0, 0}, {}});
  bases.push_back({x_only_factorization(), {-4, 16, -4, 2, 0, 0}, {}});
  for (auto& b : bases) b.table = bidegree_homology(b.K, b.w);

  std::mt19937 rng(7);
  int excluded = 0, transformed = 0, scaled = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Base& base = bases[rng() % bases.size()];
    KoszulFactorization K = base.K;
    int moves = 1 + static_cast<int>(rng() % 5);
    for (int m = 0; m < moves; ++m) {
      int kind = static_cast<int>(rng() % 3);
      int rows = static_cast<int>(K.rows.size());
      if (kind == 2) {
        if (auto c = exclusion_candidate(K)) {
          K = exclude_variable(K, c->first, c->second);
          ++excluded;
          continue;
        }
        kind = static_cast<int>(rng() % 2);
      }
      if (kind == 0 && rows >= 2) {
        int i = 1 + static_cast<int>(rng() % rows), j = 1 + static_cast<int>(rng() % (rows - 1));
        if (j >= i) ++j;
        Poly lam = random_multiplier(K.registry(), K.rows[i - 1].shift - K.rows[j - 1].shift, rng);
        K = row_transform(K, i, j, lam);
        ++transformed;
      } else {
        static const int nums[] = {-3, -2, -1, 1, 2, 3};
        Rational c(nums[rng() % 6], 1 + static_cast<int>(rng() % 3));
        c.canonicalize();
        K = scale_row(K, 1 + static_cast<int>(rng() % rows), c);
        ++scaled;
      }
    }
    CompareReport r = compare_tables(base.table, bidegree_homology(K, base.w), base.w);
    if (!r.pass) o.fail("trial " + std::to_string(trial) + ": " + std::to_string(r.mismatch_count) + " mismatches");
  }
  if (!excluded || !transformed || !scaled) o.fail("move mix degenerate");
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(transformed) + " transforms, " + std::to_string(scaled) +
              " scalings, " + std::to_string(excluded) + " exclusions";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget;  // seconds
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "identity suite, n <= 6", 60, identities},
      {2, "dg consistency, n <= 5", 60, dg_consistency},
      {3, "mf-simplify endpoints and fixtures, n = 2, 3", 60, mf_reductions},
      {4, "stable ideals and regular sequences, n <= 4", 600, stable_ideal_checks},
      {5, "flag-ring isomorphism, n <= 3", 300, flag_ring},
      {6, "Poincare series against oracle homology, n <= 4", 1800, poincare_reproduction},
      {7, "worked examples, n = 2, 3", 60, worked_examples},
      {8, "conjugacy invariance, n <= 5", 1800, conjugacy},
      {9, "positivity of the closed form, n <= 4", 60, positivity},
      {10, "move invariance of oracle homology, 200 sequences", 1800, move_invariance},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget) o.fail("over time budget");
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name;
    std::printf(" (%.1fs)", secs);
    if (!o.detail.empty()) std::cout << "  [" << o.detail << "]";
    std::cout << std::endl;
  }
  return failures ? 1 : 0;
}
