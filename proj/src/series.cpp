#include "hhh/series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hhh {

DimTable restrict_to(const DimTable& table, const Window& w) {
  DimTable out;
  for (const auto& [d, c] : table)
    if (c != 0 && w.contains(d)) out.emplace(d, c);
  return out;
}

DimTable shift_table(const DimTable& table, const TriDegree& s) {
  DimTable out;
  for (const auto& [d, c] : table) out.emplace(d + s, c);
  return out;
}

namespace {

std::string mono_str(const TriDegree& d) {
  std::ostringstream os;
  auto put = [&](char v, int e) {
    if (e == 0) return;
    if (os.tellp() > 0) os << " ";
    os << v;
    if (e != 1) os << "^" << e;
  };
  put('q', d.q);
  put('t', d.t);
  put('a', d.a);
  return os.str().empty() ? "1" : os.str();
}

void check_nonnegative(const TriDegree& d, const char* what) {
  if (d.t < 0 || d.a < 0) throw Error(Errc::infinite_slice, std::string(what) + " with negative t or a exponent");
}

}  // namespace

std::string PoincareSeries::str() const {
  std::ostringstream os;
  if (prefactor_coeff != 1) os << prefactor_coeff << " ";
  os << mono_str(prefactor);
  for (const auto& f : numerators) os << " (1 " << (f.sign > 0 ? "+" : "-") << " " << mono_str(f.degree) << ")";
  if (!denominators.empty()) {
    os << " / (";
    for (std::size_t k = 0; k < denominators.size(); ++k)
      os << (k ? " " : "") << "(1 - " << mono_str(denominators[k]) << ")";
    os << ")";
  }
  return os.str();
}

DimTable expand_rational(const DimTable& numerator, const std::vector<TriDegree>& denominators, const Window& w) {
  if (w.empty()) return {};
  std::vector<TriDegree> bounded, pure;
  for (const auto& d : denominators) {
    check_nonnegative(d, "denominator");
    if (d.t > 0 || d.a > 0) bounded.push_back(d);
    else if (d.q > 0) pure.push_back(d);
    else throw Error(Errc::infinite_slice, "denominator (1 - " + mono_str(d) + ") has no finite expansion");
  }
  auto in_bounds = [&](const TriDegree& d) { return d.t <= w.tmax && d.a <= w.amax; };

  DimTable acc;
  for (const auto& [d, c] : numerator)
    if (c != 0 && in_bounds(d)) acc[d] += c;
  for (const auto& m : bounded) {
    DimTable next = acc;
    for (const auto& [d, c] : acc)
      for (TriDegree e = d + m; in_bounds(e); e += m) next[e] += c;
    acc = std::move(next);
  }

  // pure q-factors only raise q: expand densely per (t, a)
  std::map<std::pair<int, int>, std::map<int, long long>> columns;
  for (const auto& [d, c] : acc)
    if (c != 0 && d.q <= w.qmax) columns[{d.t, d.a}][d.q] += c;
  DimTable out;
  for (auto& [ta, col] : columns) {
    int qlo = col.begin()->first;
    std::vector<long long> v(w.qmax - qlo + 1, 0);
    for (const auto& [q, c] : col) v[q - qlo] += c;
    for (const auto& m : pure)
      for (std::size_t k = m.q; k < v.size(); ++k) v[k] += v[k - m.q];
    for (std::size_t k = 0; k < v.size(); ++k) {
      TriDegree d{qlo + static_cast<int>(k), ta.first, ta.second};
      if (v[k] != 0 && w.contains(d)) out[d] = v[k];
    }
  }
  return out;
}

DimTable expand_series(const PoincareSeries& s, const Window& w) {
  if (w.empty()) return {};
  auto in_bounds = [&](const TriDegree& d) { return d.t <= w.tmax && d.a <= w.amax; };
  check_nonnegative(s.prefactor, "prefactor");
  DimTable acc;
  if (in_bounds(s.prefactor)) acc[s.prefactor] = s.prefactor_coeff;
  for (const auto& f : s.numerators) {
    check_nonnegative(f.degree, "numerator");
    DimTable next = acc;
    for (const auto& [d, c] : acc) {
      TriDegree e = d + f.degree;
      if (in_bounds(e)) next[e] += f.sign * c;
    }
    acc = std::move(next);
  }
  return expand_rational(acc, s.denominators, w);
}

namespace {

void check_partition(int n, const std::vector<int>& cycle_type) {
  if (n < 1 || cycle_type.empty() || std::accumulate(cycle_type.begin(), cycle_type.end(), 0) != n ||
      *std::min_element(cycle_type.begin(), cycle_type.end()) < 1)
    throw Error(Errc::invalid_permutation, "cycle type is not a partition of " + std::to_string(n));
}

}  // namespace

PoincareSeries poincare_series_even(int n, const std::vector<int>& cycle_type) {
  check_partition(n, cycle_type);
  int r = static_cast<int>(cycle_type.size());
  PoincareSeries s;
  s.prefactor = TriDegree{-2, 1, 0} * (n - r);
  for (int k = 0; k < r - 1; ++k) s.numerators.push_back({{-2, 2, 0}, -1});
  for (int k = 0; k < r; ++k) s.denominators.push_back({2, 0, 0});
  for (int j = 2; j <= n; ++j) s.denominators.push_back({-2 * j, 2, 0});
  return s;
}

PoincareSeries poincare_series(int n, const std::vector<int>& cycle_type) {
  PoincareSeries s = poincare_series_even(n, cycle_type);
  std::vector<NumeratorFactor> ext;
  for (int i = 1; i <= n; ++i) ext.push_back({{-2 * i, 0, 1}, 1});
  s.numerators.insert(s.numerators.end(), ext.begin(), ext.end());
  return s;
}

PoincareSeries specialize_t_minus_one(const PoincareSeries& s) {
  PoincareSeries out;
  auto sign_of = [](int t) { return (t % 2 == 0) ? 1 : -1; };
  out.prefactor_coeff = s.prefactor_coeff * sign_of(s.prefactor.t);
  out.prefactor = {s.prefactor.q, 0, s.prefactor.a};
  for (const auto& f : s.numerators) out.numerators.push_back({{f.degree.q, 0, f.degree.a}, f.sign * sign_of(f.degree.t)});
  for (const auto& d : s.denominators) {
    if (d.t % 2 != 0) throw Error(Errc::internal, "odd t-exponent in a denominator");
    out.denominators.push_back({d.q, 0, d.a});
  }
  return out;
}

}  // namespace hhh
