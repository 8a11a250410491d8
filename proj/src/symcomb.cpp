#include "hhh/symcomb.hpp"

#include <algorithm>

namespace hhh {

namespace {

std::vector<Poly> var_polys(const RegistryPtr& reg, const std::vector<std::string>& vars) {
  std::vector<Poly> out;
  out.reserve(vars.size());
  for (const auto& v : vars) out.push_back(Poly::var(reg, v));
  return out;
}

}  // namespace

Poly elementary(const RegistryPtr& reg, int k, const std::vector<std::string>& vars) {
  if (k < 0 || k > static_cast<int>(vars.size())) return Poly(reg);
  // e_k(x_1..x_m) = e_k(x_1..x_{m-1}) + x_m e_{k-1}(x_1..x_{m-1})
  std::vector<Poly> e(k + 1, Poly(reg));
  e[0] = Poly::constant(reg, 1);
  for (const Poly& x : var_polys(reg, vars))
    for (int d = k; d >= 1; --d) e[d] += x * e[d - 1];
  return e[k];
}

Poly complete(const RegistryPtr& reg, int k, const std::vector<std::string>& vars) {
  if (k < 0) return Poly(reg);
  if (k == 0) return Poly::constant(reg, 1);
  if (vars.empty()) return Poly(reg);
  // h_k(x_1..x_m) = h_k(x_1..x_{m-1}) + x_m h_{k-1}(x_1..x_m)
  std::vector<Poly> h(k + 1, Poly(reg));
  h[0] = Poly::constant(reg, 1);
  for (const Poly& x : var_polys(reg, vars))
    for (int d = 1; d <= k; ++d) h[d] += x * h[d - 1];
  return h[k];
}

Poly sym_poly(const RegistryPtr& reg, const SymFunSpec& spec) {
  return spec.family == SymFamily::elementary ? elementary(reg, spec.k, spec.vars) : complete(reg, spec.k, spec.vars);
}

std::vector<std::string> x_vars(int from, int to) {
  std::vector<std::string> out;
  for (int i = from; i <= to; ++i) out.push_back(x_name(i));
  return out;
}

std::vector<std::string> y_vars(int from, int to) {
  std::vector<std::string> out;
  for (int i = from; i <= to; ++i) out.push_back(y_name(i));
  return out;
}

Poly swap_vars(const Poly& p, std::size_t a, std::size_t b) {
  std::vector<Poly::Term> terms(p.terms());
  for (auto& t : terms) {
    int ea = t.first.e[a], eb = t.first.e[b];
    t.first.e[a] = static_cast<std::uint8_t>(eb);
    t.first.e[b] = static_cast<std::uint8_t>(ea);
  }
  return Poly(p.registry(), std::move(terms));
}

bool is_symmetric_in(const Poly& p, const std::vector<std::string>& vars) {
  const Registry& reg = *p.registry();
  for (std::size_t k = 0; k + 1 < vars.size(); ++k) {
    auto a = reg.find(vars[k]);
    auto b = reg.find(vars[k + 1]);
    if (!a || !b) {
      // a missing variable cannot occur in p
      if (a && p.involves(*a)) return false;
      if (b && p.involves(*b)) return false;
      continue;
    }
    if (!(swap_vars(p, *a, *b) == p)) return false;
  }
  return true;
}

Poly divided_difference(int i, const Poly& p) {
  const RegistryPtr& reg = p.registry();
  if (i < 1 || i >= reg->n()) throw Error(Errc::index_out_of_range, "divided difference index out of range");
  std::size_t a = reg->index(x_name(i));
  std::size_t b = reg->index(x_name(i + 1));
  // x_a^s x_b^t -> (x_a x_b)^min * (+-) h_{|s-t|-1}(x_a, x_b)
  std::vector<Poly::Term> out;
  for (const auto& [m, c] : p.terms()) {
    int s = m.e[a], t = m.e[b];
    if (s == t) continue;
    int lo = std::min(s, t);
    int d = std::abs(s - t);
    Rational sign = s > t ? c : Rational(-c);
    for (int r = 0; r < d; ++r) {
      Monomial q = m;
      q.set(a, lo + r);
      q.set(b, lo + d - 1 - r);
      out.push_back({q, sign});
    }
  }
  return Poly(reg, std::move(out));
}

Poly demazure_trace(const Poly& p, int n) {
  if (!is_symmetric_in(p, x_vars(1, n - 1)))
    throw Error(Errc::not_partially_symmetric, "argument is not symmetric in x_1..x_" + std::to_string(n - 1));
  Poly r = p;
  for (int i = n - 1; i >= 1; --i) r = divided_difference(i, r);
  if (!is_symmetric_in(r, x_vars(1, n))) throw Error(Errc::internal, "trace is not symmetric");
  return r;
}

Poly frobenius_pairing(const Poly& f, const Poly& g, int n) { return demazure_trace(f * g, n); }

}  // namespace hhh
