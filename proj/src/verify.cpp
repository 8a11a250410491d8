#include "hhh/verify.hpp"

#include "hhh/mf.hpp"
#include "hhh/schubert.hpp"
#include "hhh/symcomb.hpp"

namespace hhh {

std::vector<Check> identity_suite(int n) {
  if (n < 1) throw Error(Errc::index_out_of_range, "n must be positive");
  std::vector<Check> out;
  QuotientPtr In = In_quotient(n);
  const RegistryPtr& reg = In->registry();
  std::string ns = "[n=" + std::to_string(n) + "]";

  for (int i = 1; i <= n; ++i) {
    Poly s(reg);
    for (int j = i; j <= n; ++j) s += a_poly(i, j, n, reg) * -p_poly(reg, j, j);
    Poly r = In->normal_form(s);
    out.push_back({"a_relation" + ns + " i=" + std::to_string(i), r.is_zero(), r.is_zero() ? "" : "remainder " + r.str()});
  }

  for (int m = 1; m <= n; ++m) {
    Poly zs = z_poly_sequences(m, n, reg), zf = z_poly_symfun(m, n, reg);
    bool eq = zs == zf;
    out.push_back({"z_equal" + ns + " m=" + std::to_string(m), eq, eq ? "" : "difference " + (zs - zf).str()});
    bool in = In->contains(zs) && In->contains(zf);
    out.push_back({"z_in_ideal" + ns + " m=" + std::to_string(m), in, ""});
  }

  RegistryPtr xr = x_registry(n);
  auto lower = x_vars(1, n - 1);
  bool delta = true;
  std::string bad;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Poly f = Poly::var(xr, x_name(n)).pow(i) * Rational(i % 2 ? -1 : 1);
      Poly g = elementary(xr, n - 1 - j, lower);
      Poly v = frobenius_pairing(f, g, n);
      Poly want = Poly::constant(xr, i == j ? 1 : 0);
      if (!(v == want)) {
        delta = false;
        if (bad.empty()) bad = "entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " + v.str();
      }
    }
  out.push_back({"trace_pairing" + ns, delta, bad});
  return out;
}

std::vector<Check> dg_suite(int n) {
  if (n < 1) throw Error(Errc::index_out_of_range, "n must be positive");
  std::vector<Check> out;
  std::string ns = "[n=" + std::to_string(n) + "]";
  for (const auto& ct : partitions(n)) {
    Permutation w = Permutation::special(ct);
    auto res = dg_square_residual(to_dg_module(build_Mn(n, w)));
    out.push_back({"d_squared" + ns + " " + w.str(), res.empty(),
                   res.empty() ? "" : std::to_string(res.size()) + " generators with d^2 != 0"});
  }
  if (n >= 2) {
    PhiReport rep = phi_chain_map_residual(n);
    out.push_back({"phi_chain_map" + ns, rep.zero(),
                   rep.zero() ? ""
                              : std::to_string(rep.residual.size()) + " residual generators, " +
                                    std::to_string(rep.ill_defined.size()) + " relations not preserved"});
  }
  return out;
}

bool all_pass(const std::vector<Check>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

}  // namespace hhh
