#include "hhh/schubert.hpp"

#include <functional>

#include "hhh/symcomb.hpp"

namespace hhh {

RegistryPtr x_registry(int n) { return RegistryBuilder(n).x().build(); }
RegistryPtr xy_registry(int n) { return RegistryBuilder(n).x().y().build(); }
RegistryPtr xu_registry(int n) { return RegistryBuilder(n).x().u().build(); }
RegistryPtr xyu_registry(int n) { return RegistryBuilder(n).x().y().u().build(); }

Poly p_poly(const RegistryPtr& reg, int i, int j) { return Poly::var(reg, y_name(i)) - Poly::var(reg, x_name(j)); }
Poly q_poly(const RegistryPtr& reg, int i, int j) { return Poly::var(reg, x_name(i)) - Poly::var(reg, x_name(j)); }

namespace {

void check_range(bool ok, const char* what) {
  if (!ok) throw Error(Errc::index_out_of_range, what);
}

// Sum over 1 <= g_1 < ... < g_len <= top of prod_r (y_{g_r} - x_{g_r + len - r + offset}).
Poly increasing_sum(const RegistryPtr& reg, int len, int top, int offset) {
  if (len == 0) return Poly::constant(reg, 1);
  // memo[r][g]: sum over choices of g_r..g_len with g_r >= g
  std::vector<std::vector<std::optional<Poly>>> memo(len + 2, std::vector<std::optional<Poly>>(top + 2));
  std::function<Poly(int, int)> rec = [&](int r, int g) -> Poly {
    if (r > len) return Poly::constant(reg, 1);
    if (g > top - (len - r)) return Poly(reg);
    auto& slot = memo[r][g];
    if (slot) return *slot;
    Poly take = p_poly(reg, g, g + len - r + offset) * rec(r + 1, g + 1);
    Poly acc = take + rec(r, g + 1);
    slot = acc;
    return acc;
  };
  return rec(1, 1);
}

}  // namespace

Poly a_poly(int i, int j, int n, RegistryPtr reg) {
  check_range(1 <= i && i <= j && j <= n, "a_ij needs 1 <= i <= j <= n");
  if (!reg) reg = xy_registry(n);
  // factor k: y_{g_k} - x_{g_k + i - k}; with len = i-1 the offset is 1
  return increasing_sum(reg, i - 1, j - 1, 1);
}

Poly z_poly_sequences(int m, int n, RegistryPtr reg) {
  check_range(1 <= m && m <= n, "z_{m,n} needs 1 <= m <= n");
  if (!reg) reg = xy_registry(n);
  return increasing_sum(reg, m, n, 0);
}

Poly z_poly_symfun(int m, int n, RegistryPtr reg) {
  check_range(1 <= m && m <= n, "z_{m,n} needs 1 <= m <= n");
  if (!reg) reg = xy_registry(n);
  Poly acc(reg);
  auto ys = y_vars(1, n);
  auto xs = x_vars(m, n);
  for (int j = 0; j <= m; ++j) {
    Poly t = elementary(reg, m - j, ys) * complete(reg, j, xs);
    acc = (j % 2) ? acc - t : acc + t;
  }
  return acc;
}

Assignment y_to_x(int n, const RegistryPtr& target, const std::optional<Permutation>& w) {
  Assignment s;
  for (int i = 1; i <= n; ++i) s.emplace(y_name(i), Poly::var(target, x_name(w ? (*w)(i) : i)));
  return s;
}

Poly a_twisted(int i, int j, const Permutation& w, RegistryPtr reg) {
  int n = w.n();
  if (!reg) reg = xu_registry(n);
  return substitute(a_poly(i, j, n), y_to_x(n, reg, w), reg);
}

Poly b_poly(int j, int n, const std::optional<Permutation>& twist, RegistryPtr reg) {
  check_range(1 <= j && j <= n, "b_j needs 1 <= j <= n");
  if (twist && twist->n() != n) throw Error(Errc::invalid_permutation, "twist has the wrong size");
  if (!reg) reg = twist ? xu_registry(n) : xyu_registry(n);
  Poly acc(reg);
  for (int i = 1; i <= j; ++i) {
    Poly a = twist ? a_twisted(i, j, *twist, reg) : a_poly(i, j, n, reg);
    acc += Poly::var(reg, u_name(i)) * a;
  }
  return acc;
}

VkkExpansion vkk_expansion(int k, int n) {
  check_range(2 <= k && k <= n, "v_kk expansion needs 2 <= k <= n");
  RegistryPtr reg = x_registry(n);
  VkkExpansion out{k, std::vector<Poly>(k, Poly(reg))};
  // word letters: false = L, true = R; weight of the r-th R at position p is -(x_{k-p} - x_{k-p+r})
  for (unsigned long mask = 0; mask < (1ul << (k - 1)); ++mask) {
    Poly wt = Poly::constant(reg, 1);
    int r = 0;
    for (int p = 1; p <= k - 1; ++p) {
      if (!(mask >> (p - 1) & 1)) continue;
      ++r;
      wt = wt * -q_poly(reg, k - p, k - p + r);
    }
    out.coeffs[r] += wt;
  }
  return out;
}

}  // namespace hhh
