#pragma once

// Independent reference computations used by the tests.

#include <fstream>
#include <functional>
#include <random>
#include <stdexcept>
#include <sstream>
#include <string>
#include <vector>

#include "hhh/poly.hpp"
#include "hhh/series.hpp"

namespace hhh::testing {

inline std::string read_file(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

inline Poly P(const RegistryPtr& reg, const char* text) { return parse_poly(reg, text); }

/// Graded dimensions of a monomial set given by a predicate on exponent
/// vectors. Variables must have t > 0, a > 0 or positive pure q-degree.
inline DimTable count_monomials(const std::vector<TriDegree>& degs,
                                const std::function<bool(const std::vector<int>&)>& keep, const TriDegree& shift,
                                const Window& w) {
  // bounded variables first; pure q-variables only raise q afterwards
  std::vector<std::size_t> order;
  for (std::size_t k = 0; k < degs.size(); ++k)
    if (degs[k].t > 0 || degs[k].a > 0) order.push_back(k);
  std::size_t nbounded = order.size();
  for (std::size_t k = 0; k < degs.size(); ++k)
    if (degs[k].t == 0 && degs[k].a == 0) {
      if (degs[k].q <= 0) throw std::invalid_argument("pure q-degree must be positive");
      order.push_back(k);
    }
  DimTable out;
  std::vector<int> e(degs.size(), 0);
  std::function<void(std::size_t, TriDegree)> rec = [&](std::size_t pos, TriDegree d) {
    if (pos == order.size()) {
      if (w.contains(d) && keep(e)) ++out[d];
      return;
    }
    std::size_t k = order[pos];
    bool pure = pos >= nbounded;
    for (e[k] = 0;; ++e[k], d += degs[k]) {
      if (pure ? d.q > w.qmax : (d.t > w.tmax || d.a > w.amax)) break;
      rec(pos + 1, d);
    }
    e[k] = 0;
  };
  rec(0, shift);
  return out;
}

inline bool all_monomials(const std::vector<int>&) { return true; }

/// Coefficients of a closed-form series by summing over exponent vectors of
/// the denominators and subsets of the numerator factors.
inline DimTable brute_series(const PoincareSeries& s, const Window& w) {
  DimTable out;
  std::size_t nn = s.numerators.size();
  for (unsigned mask = 0; mask < (1u << nn); ++mask) {
    TriDegree base = s.prefactor;
    long long sign = s.prefactor_coeff;
    for (std::size_t k = 0; k < nn; ++k)
      if (mask >> k & 1) {
        base += s.numerators[k].degree;
        sign *= s.numerators[k].sign;
      }
    DimTable part = count_monomials(s.denominators, all_monomials, base, w);
    for (const auto& [d, c] : part) out[d] += sign * c;
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

/// Rank over Q by textbook Gaussian elimination.
inline std::size_t dense_rank(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  if (m.empty()) return 0;
  std::size_t cols = m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// All monomials of total degree d over the first `nvars` variables.
inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, int d) {
  std::vector<Monomial> out;
  Monomial m;
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
    if (k + 1 == nvars) {
      m.set(k, left);
      out.push_back(m);
      m.set(k, 0);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      m.set(k, e);
      rec(k + 1, left - e);
    }
    m.set(k, 0);
  };
  if (nvars == 0) return d == 0 ? std::vector<Monomial>{Monomial{}} : std::vector<Monomial>{};
  rec(0, d);
  return out;
}

/// dim (R/I)_d for a standard-graded R by linear algebra on the degree-d part of I.
inline long long quotient_dimension(const RegistryPtr& reg, const std::vector<Poly>& gens, int d) {
  auto basis = monomials_of_degree(reg->size(), d);
  std::vector<std::vector<Rational>> rows;
  for (const Poly& g : gens) {
    if (g.is_zero()) continue;
    int gd = g.lead_monomial().total;
    if (gd > d) continue;
    for (const Monomial& m : monomials_of_degree(reg->size(), d - gd)) {
      Poly p = g.mul_term(m, 1);
      std::vector<Rational> row(basis.size());
      for (const auto& [mono, c] : p.terms())
        for (std::size_t k = 0; k < basis.size(); ++k)
          if (basis[k] == mono) row[k] = c;
      rows.push_back(std::move(row));
    }
  }
  return static_cast<long long>(basis.size()) - static_cast<long long>(dense_rank(rows));
}

/// Random polynomial with small coefficients of the given total degree bound.
inline Poly random_poly(const RegistryPtr& reg, std::mt19937& rng, int max_deg, int terms) {
  std::uniform_int_distribution<int> coef(-5, 5), deg(0, max_deg);
  std::vector<Poly::Term> out;
  for (int k = 0; k < terms; ++k) {
    int d = deg(rng);
    Monomial m;
    for (int j = 0; j < d; ++j) {
      std::size_t v = rng() % reg->size();
      m.set(v, m[v] + 1);
    }
    out.push_back({m, Rational(coef(rng), 1 + static_cast<int>(rng() % 3))});
  }
  for (auto& t : out) t.second.canonicalize();
  return Poly(reg, std::move(out));
}

}  // namespace hhh::testing
