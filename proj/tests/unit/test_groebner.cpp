#include <doctest.h>

#include "../helpers.hpp"
#include "hhh/hhh.hpp"
#include "hhh/mf.hpp"
#include "hhh/schubert.hpp"

using namespace hhh;
using namespace hhh::testing;

namespace {

/// Every S-polynomial of the basis reduces to zero.
bool buchberger_closed(const std::vector<Poly>& g) {
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      Monomial l = g[i].lead_monomial().lcm(g[j].lead_monomial());
      Poly s = g[i].mul_term(l.quotient(g[i].lead_monomial()), 1 / g[i].lead_coeff()) -
               g[j].mul_term(l.quotient(g[j].lead_monomial()), 1 / g[j].lead_coeff());
      if (!reduce(s, g).is_zero()) return false;
    }
  return true;
}

RegistryPtr pure_registry(int nvars) { return x_registry(nvars); }

}  // namespace

TEST_SUITE("groebner") {

TEST_CASE("principal ideals") {
  auto reg = x_registry(2);
  auto g = groebner_basis({reg, {P(reg, "x1 - x2")}});
  REQUIRE(g.size() == 1);
  CHECK((g[0] == P(reg, "x1 - x2") || g[0] == P(reg, "x2 - x1")));
  auto ereg = e_registry(2);
  auto h = groebner_basis({ereg, {P(ereg, "(x1 - x2)*v12")}});
  REQUIRE(h.size() == 1);
  CHECK((h[0] == P(ereg, "(x1 - x2)*v12") || h[0] == P(ereg, "(x2 - x1)*v12")));
}

TEST_CASE("bases are closed under S-pairs and generate the ideal") {
  std::mt19937 rng(11);
  auto reg = pure_registry(4);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<Poly> gens;
    for (int k = 0; k < 3; ++k) {
      // homogeneous: keep only the top-degree part of a random polynomial
      Poly p = random_poly(reg, rng, 3, 5);
      if (p.is_zero()) continue;
      int d = p.lead_monomial().total;
      std::vector<Poly::Term> top;
      for (const auto& t : p.terms())
        if (t.first.total == d) top.push_back(t);
      gens.push_back(Poly(reg, top));
    }
    auto g = groebner_basis({reg, gens});
    CHECK(buchberger_closed(g));
    for (const Poly& p : gens) CHECK(reduce(p, g).is_zero());
    for (const Poly& p : g) CHECK(p.lead_coeff() == 1);
  }
}

TEST_CASE("normal forms") {
  for (int n = 1; n <= 5; ++n) {
    QuotientPtr In = In_quotient(n);
    const RegistryPtr& reg = In->registry();
    Poly prod = Poly::constant(reg, 1);
    for (int i = 1; i <= n; ++i) prod *= p_poly(reg, i, n);
    CHECK(In->normal_form(prod).is_zero());
    CHECK(In->normal_form(Poly::constant(reg, 1)) == Poly::constant(reg, 1));
  }
}

TEST_CASE("ideal equality") {
  auto reg = x_registry(2);
  Ideal I{reg, {P(reg, "x1^2"), P(reg, "x1*x2")}};
  CHECK(ideal_equal(I, I));
  CHECK(!ideal_equal({reg, {P(reg, "x1")}}, {reg, {P(reg, "x2")}}));
  CHECK(ideal_equal({reg, {P(reg, "x1 - x2"), P(reg, "x1 + x2")}}, {reg, {P(reg, "x1"), P(reg, "x2")}}));
}

TEST_CASE("stable ideals agree for n <= 3") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& ct : partitions(n)) {
      StableIdeals m = stable_ideals(Permutation::special(ct));
      CHECK(ideal_equal(ideal_sum(m.I, m.J), ideal_sum(m.Ip, m.Jpp)));
      CHECK(ideal_equal(ideal_sum(m.I, m.J), ideal_sum(m.Ip, m.Jp)));
    }
}

TEST_CASE("Hilbert function of Q[x]/(x)") {
  auto reg = x_registry(1);
  Quotient q({reg, {P(reg, "x1")}});
  CHECK(hilbert_function(q, {-10, 10, 0, 3, 0, 1}) == DimTable{{{0, 0, 0}, 1}});
}

TEST_CASE("Hilbert functions agree with linear algebra on graded pieces") {
  std::mt19937 rng(12);
  auto reg = pure_registry(3);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Poly> gens;
    for (int k = 0; k < 2; ++k) {
      Poly p = random_poly(reg, rng, 2, 4);
      if (p.is_zero()) continue;
      int d = p.lead_monomial().total;
      std::vector<Poly::Term> top;
      for (const auto& t : p.terms())
        if (t.first.total == d) top.push_back(t);
      gens.push_back(Poly(reg, top));
    }
    Quotient q({reg, gens});
    Window w{0, 12, 0, 0, 0, 0};
    DimTable h = hilbert_function(q, w);
    CHECK(h == hilbert_function_enumerate(q, w));
    for (int d = 0; d <= 6; ++d) {
      long long got = h.count({2 * d, 0, 0}) ? h.at({2 * d, 0, 0}) : 0;
      CHECK(got == quotient_dimension(reg, gens, d));
    }
  }
}

TEST_CASE("Hilbert function with mixed gradings matches enumeration") {
  for (int n = 2; n <= 3; ++n)
    for (const auto& ct : partitions(n)) {
      auto pres = stable_homology_presentation(n, Permutation::special(ct));
      Window w{-14, 14, 0, 6, 0, 0};
      CHECK(hilbert_function(*pres.ring, w) == hilbert_function_enumerate(*pres.ring, w));
    }
}

TEST_CASE("free ring series") {
  auto reg = xu_registry(2);
  PoincareSeries s = free_ring_series(*reg);
  CHECK(s.denominators.size() == 4);
  Window w{-10, 10, 0, 4, 0, 0};
  CHECK(hilbert_function(Quotient({reg, {}}), w) == expand_series(s, w));
}

TEST_CASE("regular sequences") {
  auto reg = x_registry(2);
  Window w{0, 20, 0, 0, 0, 0};
  CHECK(!certify_regular_sequence({P(reg, "x1"), P(reg, "x1")}, reg, w).accept);
  CHECK(certify_regular_sequence({P(reg, "x1"), P(reg, "x2^2")}, reg, w).accept);
  CHECK(!certify_regular_sequence({P(reg, "x1*x2"), P(reg, "x1^2")}, reg, w).accept);
  for (int n = 1; n <= 4; ++n) {
    auto xu = xu_registry(n);
    std::vector<Poly> seq;
    for (int j = 1; j <= n; ++j) seq.push_back(b_poly(j, n, Permutation(n), xu));
    CHECK(certify_regular_sequence(seq, xu, {-20, 20, 0, 10, 0, 0}).accept);
  }
}

TEST_CASE("the S-pair budget is enforced") {
  auto reg = x_registry(3);
  Ideal I{reg, {P(reg, "x1^2 + x2*x3"), P(reg, "x2^2 - x1*x3"), P(reg, "x3^2 + x1*x2 + x2^2")}};
  CHECK(groebner_basis(I).size() > 3);
  try {
    groebner_basis(I, GroebnerOptions{1});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::resource_limit);
  }
}

}  // TEST_SUITE
