#include "hhh/sparse_rank.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace hhh {

namespace {

struct Overflow {};

struct I64 {
  using T = long long;
  static T from(const mpz_class& z) {
    if (!z.fits_slong_p()) throw Overflow{};
    return z.get_si();
  }
  static T mul(T a, T b) {
    T r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static T sub(T a, T b) {
    T r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static T gcd(T a, T b) { return std::gcd(a, b); }
  static bool is_unit(T a) { return a == 1 || a == -1; }
  static T abs(T a) { return a < 0 ? -a : a; }
  static bool less_abs(T a, T b) { return abs(a) < abs(b); }
  static T div(T a, T b) { return a / b; }
};

struct Gmp {
  using T = mpz_class;
  static T from(const mpz_class& z) { return z; }
  static T mul(const T& a, const T& b) { return a * b; }
  static T sub(const T& a, const T& b) { return a - b; }
  static T gcd(const T& a, const T& b) {
    T g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
  }
  static bool is_unit(const T& a) { return a == 1 || a == -1; }
  static T abs(const T& a) { return ::abs(a); }
  static bool less_abs(const T& a, const T& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0; }
  static T div(const T& a, const T& b) { return a / b; }
};

template <class A>
std::size_t rank_impl(const SparseIntMatrix& m) {
  using T = typename A::T;
  using Vec = std::vector<std::pair<std::uint32_t, T>>;

  std::vector<std::size_t> row_count(m.rows, 0);
  for (const auto& c : m.cols)
    for (const auto& e : c) ++row_count[e.first];

  std::vector<std::size_t> order(m.cols.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return m.cols[a].size() < m.cols[b].size(); });

  // registered vectors and their pivot rows; reg_of_row = registration index or -1
  std::vector<Vec> regs;
  std::vector<std::uint32_t> pivot_row;
  std::vector<std::int32_t> reg_of_row(m.rows, -1);

  Vec v, tmp;
  for (std::size_t ci : order) {
    v.clear();
    for (const auto& [r, z] : m.cols[ci]) v.push_back({r, A::from(z)});
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    while (!v.empty()) {
      // earliest registered pivot present in v
      std::int32_t best = -1;
      std::size_t pos = 0;
      for (std::size_t k = 0; k < v.size(); ++k) {
        std::int32_t g = reg_of_row[v[k].first];
        if (g >= 0 && (best < 0 || g < best)) {
          best = g;
          pos = k;
        }
      }
      if (best < 0) break;
      const Vec& p = regs[best];
      std::uint32_t r = v[pos].first;
      auto pit = std::lower_bound(p.begin(), p.end(), r, [](const auto& e, std::uint32_t x) { return e.first < x; });
      T a = pit->second;
      T b = v[pos].second;
      T g = A::gcd(a, b);
      a = A::div(a, g);
      b = A::div(b, g);
      // v <- a v - b p
      tmp.clear();
      std::size_t i = 0, j = 0;
      while (i < v.size() || j < p.size()) {
        if (j == p.size() || (i < v.size() && v[i].first < p[j].first)) {
          tmp.push_back({v[i].first, A::mul(a, v[i].second)});
          ++i;
        } else if (i == v.size() || p[j].first < v[i].first) {
          tmp.push_back({p[j].first, A::sub(T(0), A::mul(b, p[j].second))});
          ++j;
        } else {
          T val = A::sub(A::mul(a, v[i].second), A::mul(b, p[j].second));
          if (val != 0) tmp.push_back({v[i].first, val});
          ++i;
          ++j;
        }
      }
      T content = 0;
      for (const auto& e : tmp) {
        content = A::gcd(content, e.second);
        if (A::is_unit(content)) break;
      }
      if (content != 0 && !A::is_unit(content))
        for (auto& e : tmp) e.second = A::div(e.second, content);
      std::swap(v, tmp);
    }
    if (v.empty()) continue;
    // pivot: a unit entry in the sparsest row, else the smallest entry
    std::size_t pick = 0;
    for (std::size_t k = 1; k < v.size(); ++k) {
      bool ku = A::is_unit(v[k].second), pu = A::is_unit(v[pick].second);
      if (ku != pu) {
        if (ku) pick = k;
        continue;
      }
      if (!ku && A::less_abs(v[k].second, v[pick].second)) {
        pick = k;
        continue;
      }
      if (A::abs(v[k].second) == A::abs(v[pick].second) && row_count[v[k].first] < row_count[v[pick].first]) pick = k;
    }
    reg_of_row[v[pick].first] = static_cast<std::int32_t>(regs.size());
    pivot_row.push_back(v[pick].first);
    regs.push_back(v);
  }
  return regs.size();
}

}  // namespace

std::size_t exact_rank(const SparseIntMatrix& m) {
  try {
    return rank_impl<I64>(m);
  } catch (const Overflow&) {
    return rank_impl<Gmp>(m);
  }
}

std::size_t exact_rank_gmp(const SparseIntMatrix& m) { return rank_impl<Gmp>(m); }

}  // namespace hhh
