#pragma once

// The polynomials a_ij(x, y), z_{m,n}, b_j and the v_kk expansion.

#include <optional>
#include <vector>

#include "hhh/permutation.hpp"
#include "hhh/poly.hpp"

namespace hhh {

RegistryPtr x_registry(int n);
RegistryPtr xy_registry(int n);
RegistryPtr xu_registry(int n);
RegistryPtr xyu_registry(int n);

/// y_i - x_j.
Poly p_poly(const RegistryPtr& reg, int i, int j);
/// x_i - x_j.
Poly q_poly(const RegistryPtr& reg, int i, int j);

/// a_ij(x, y): sum over 1 <= g_1 < ... < g_{i-1} < j of prod_k (y_{g_k} - x_{g_k + i - k}).
/// a_1j = 1. Lives in `reg` (default x,y registry of size n).
/// Up to sign, a_in is a double Schubert polynomial S_w(w_0(x), y) for the
/// cycle w = (n, n-i+1, ..., n-1). Nothing here relies on that.
Poly a_poly(int i, int j, int n, RegistryPtr reg = nullptr);

/// sum over increasing g of length m in [1, n] of prod_i (y_{g_i} - x_{g_i + m - i}).
Poly z_poly_sequences(int m, int n, RegistryPtr reg = nullptr);
/// sum_{i+j=m} (-1)^j e_i(y_1..y_n) h_j(x_m..x_n).
Poly z_poly_symfun(int m, int n, RegistryPtr reg = nullptr);

/// b_j = sum_{i<=j} u_i a_ij(x, y) over x,y,u; with a twist the specialization
/// y_i -> x_{w(i)} over x,u.
Poly b_poly(int j, int n, const std::optional<Permutation>& twist = std::nullopt, RegistryPtr reg = nullptr);

/// a_ij(x, w(x)) over `reg` (default x,u registry).
Poly a_twisted(int i, int j, const Permutation& w, RegistryPtr reg = nullptr);

struct VkkExpansion {
  int k = 0;
  /// coeffs[i-1] is the coefficient of v_{1,i}, over the x registry.
  std::vector<Poly> coeffs;
};

/// Expansion of v_kk in v_11..v_1k by summing Boltzmann weights of LR-words.
VkkExpansion vkk_expansion(int k, int n);

/// The substitution y_i -> x_{w(i)} (w = identity when absent) into `target`.
Assignment y_to_x(int n, const RegistryPtr& target, const std::optional<Permutation>& w = std::nullopt);

}  // namespace hhh
