#pragma once

// Graded dimension tables and Poincare series in (q, t, a).

#include <map>
#include <string>
#include <vector>

#include "hhh/poly.hpp"

namespace hhh {

/// Inclusive box of tridegrees.
struct Window {
  int qmin = 0, qmax = 0;
  int tmin = 0, tmax = 0;
  int amin = 0, amax = 0;

  bool contains(const TriDegree& d) const {
    return qmin <= d.q && d.q <= qmax && tmin <= d.t && d.t <= tmax && amin <= d.a && d.a <= amax;
  }
  bool empty() const { return qmin > qmax || tmin > tmax || amin > amax; }
  Window shifted(const TriDegree& d) const {
    return {qmin + d.q, qmax + d.q, tmin + d.t, tmax + d.t, amin + d.a, amax + d.a};
  }
  bool operator==(const Window&) const = default;
};

/// Nonzero graded dimensions; absent keys are zero.
using DimTable = std::map<TriDegree, long long>;

DimTable restrict_to(const DimTable& table, const Window& w);
DimTable shift_table(const DimTable& table, const TriDegree& d);

struct NumeratorFactor {
  TriDegree degree;
  int sign = 1;  // factor (1 + sign * T^degree)
  bool operator==(const NumeratorFactor&) const = default;
};

/// prefactor_coeff * T^prefactor * prod(1 + s m) / prod(1 - m).
struct PoincareSeries {
  long long prefactor_coeff = 1;
  TriDegree prefactor;
  std::vector<NumeratorFactor> numerators;
  std::vector<TriDegree> denominators;

  std::string str() const;
};

/// Truncated Laurent expansion on `w`. Throws infinite-slice when a
/// denominator cannot be expanded (t, a negative, or pure q-degree <= 0).
DimTable expand_series(const PoincareSeries& s, const Window& w);

/// Expansion of numerator / prod(1 - T^d) on `w` for a finite numerator table.
DimTable expand_rational(const DimTable& numerator, const std::vector<TriDegree>& denominators, const Window& w);

/// The closed form (q^-2 t)^{n-r} (1 - t^2 q^-2)^{r-1} prod_i (1 + a q^{-2i})
/// / ((1 - q^2)^r prod_{j=2..n} (1 - t^2 q^{-2j})).
PoincareSeries poincare_series(int n, const std::vector<int>& cycle_type);

/// The same without the exterior factor (a = 0 part).
PoincareSeries poincare_series_even(int n, const std::vector<int>& cycle_type);

/// Substitutes t = -1 into the closed form (all t-exponents of denominators must be even).
PoincareSeries specialize_t_minus_one(const PoincareSeries& s);

}  // namespace hhh
