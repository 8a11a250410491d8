#include <doctest.h>

#include "../helpers.hpp"
#include "hhh/hhh.hpp"
#include "hhh/mf.hpp"
#include "hhh/schubert.hpp"

using namespace hhh;
using namespace hhh::testing;

namespace {

void check_rows(const KoszulFactorization& K, const std::vector<std::pair<const char*, const char*>>& want) {
  REQUIRE(K.rows.size() == want.size());
  const RegistryPtr& reg = K.registry();
  for (std::size_t k = 0; k < want.size(); ++k) {
    CHECK(K.base->normal_form(K.rows[k].a - P(reg, want[k].first)).is_zero());
    CHECK(K.base->normal_form(K.rows[k].b - P(reg, want[k].second)).is_zero());
  }
}

}  // namespace

TEST_SUITE("mf") {

TEST_CASE("M_n rows") {
  auto K2 = build_Mn(2);
  REQUIRE(K2.rows.size() == 2);
  const RegistryPtr& reg = K2.registry();
  CHECK(K2.rows[0].a == P(reg, "y1 - x1"));
  CHECK(K2.rows[0].b == P(reg, "u1"));
  CHECK(K2.rows[1].a == P(reg, "y2 - x2"));
  CHECK(K2.rows[1].b == P(reg, "u1 + (y1 - x2)*u2"));
  CHECK(K2.global_shift == TriDegree{-2, 0, 0});
  auto K1 = build_Mn(1);
  REQUIRE(K1.rows.size() == 1);
  CHECK(K1.rows[0].b == P(K1.registry(), "u1"));
  auto K3 = build_Mn(3);
  CHECK(K3.rows[2].b == P(K3.registry(), "u1 + ((y1 - x2) + (y2 - x3))*u2 + (y1 - x3)*(y2 - x3)*u3"));
  for (const auto& r : K3.rows) {
    CHECK(r.shift == kTheta);
    check_row(r);
  }
}

TEST_CASE("potentials") {
  for (int n = 1; n <= 4; ++n) CHECK(potential(build_Mn(n)).is_zero());
  auto reg = x_registry(2);
  Poly a = P(reg, "x1"), b = P(reg, "x2^2");
  KoszulFactorization single{free_quotient(reg), {{a, b, kDiff - tridegree_of(a), 1}}, {}};
  CHECK(potential(single) == a * b);
  auto spec = hh0_specialize(build_Mn(3, Permutation::parse("(1 2 3)", 3)));
  CHECK(potential(spec).is_zero());
  CHECK(spec.base->ideal().generators.empty());
}

TEST_CASE("change of basis on M_2") {
  auto K = build_Mn(2);
  auto T = row_transform(K, 2, 1, Poly::constant(K.registry(), -1));
  check_rows(T, {{"y1 - x1 + y2 - x2", "u1"}, {"y2 - x2", "(y1 - x2)*u2"}});
  CHECK(potential(T).is_zero());
  auto same = row_transform(K, 1, 2, Poly(K.registry()));
  CHECK(same.rows[0].a == K.rows[0].a);
  CHECK(same.rows[0].b == K.rows[0].b);
  CHECK(same.rows[1].a == K.rows[1].a);
}

TEST_CASE("row_transform checks degrees") {
  auto K = build_Mn(2);
  try {
    row_transform(K, 1, 2, P(K.registry(), "x1"));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::degree_mismatch);
  }
  CHECK_THROWS_AS(row_transform(K, 1, 3, Poly::constant(K.registry(), 1)), Error);
}

TEST_CASE("scaling rows") {
  auto K = build_Mn(3);
  auto one = scale_row(K, 2, 1);
  auto twice = scale_row(scale_row(K, 2, -1), 2, -1);
  for (std::size_t k = 0; k < K.rows.size(); ++k) {
    CHECK(one.rows[k].a == K.rows[k].a);
    CHECK(one.rows[k].b == K.rows[k].b);
    CHECK(twice.rows[k].a == K.rows[k].a);
    CHECK(twice.rows[k].b == K.rows[k].b);
  }
  auto half = scale_row(K, 1, Rational(1, 2));
  CHECK(half.rows[0].a == K.rows[0].a * Rational(1, 2));
  CHECK(half.rows[0].b == K.rows[0].b * Rational(2));
  CHECK_THROWS_AS(scale_row(K, 1, 0), Error);
}

TEST_CASE("exclusion of variables") {
  auto trace = mf_simplify(2);
  const KoszulFactorization& end = trace.back().result;
  CHECK(!end.registry()->contains("u1"));
  check_rows(end, {{"y2 - x2", "(y1 - x2)*u2"}});
  CHECK(trace[trace.size() - 2].result.rows[0].a.is_zero());

  auto reg = xu_registry(2);
  KoszulFactorization bad{free_quotient(reg), {{Poly(reg), P(reg, "u1*u2"), {2, -1, 0}, 1}}, {}};
  try {
    exclude_variable(bad, 1, "u1");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::exclusion_precondition);
  }
  auto K = build_Mn(2);
  CHECK_THROWS_AS(exclude_variable(K, 1, "u1"), Error);  // left entry is nonzero
}

TEST_CASE("M_3 reduction ends in the two-row form") {
  auto trace = mf_simplify(3);
  std::vector<std::string> moves;
  for (const auto& r : trace) moves.push_back(r.move);
  CHECK(moves == std::vector<std::string>{"build_Mn", "row_transform", "row_transform", "drop_zero_entries", "exclude_variable"});
  for (const auto& r : trace) CHECK(r.potential.is_zero());
  check_rows(trace.back().result,
             {{"y2 - x2", "(y1 - x2)*u2"}, {"y3 - x3", "((y1 - x2) + (y2 - x3))*u2 + (y1 - x3)*(y2 - x3)*u3"}});
}

TEST_CASE("dg module differential") {
  auto K = mf_simplify(3).back().result;
  DgModule D = to_dg_module(K);
  REQUIRE(D.labels == std::vector<int>{2, 3});
  const RegistryPtr& reg = K.registry();
  ModuleElement want{{0u, P(reg, "(y1 - x2)*u2")}, {3u, P(reg, "-(y3 - x3)")}};
  CHECK(D.reduce(D.d_generator(1u)) == D.reduce(want));
  CHECK(theta_str(D, 3u) == "th2th3");

  auto K1 = build_Mn(1);
  DgModule D1 = to_dg_module(K1);
  ModuleElement d1 = D1.d_generator(0u);
  REQUIRE(d1.size() == 1);
  CHECK(d1.at(1u) == P(K1.registry(), "y1 - x1"));
  CHECK(D1.reduce(d1).empty());  // y1 - x1 lies in I_1
  CHECK(dg_square_residual(D1).empty());

  auto reg2 = x_registry(2);
  KoszulFactorization zero{free_quotient(reg2), {{Poly(reg2), Poly(reg2), kTheta, 1}}, {}};
  DgModule Z = to_dg_module(zero);
  CHECK(Z.reduce(Z.d_generator(0u)).empty());
  CHECK(Z.reduce(Z.d_generator(1u)).empty());
}

TEST_CASE("d squared vanishes on M_n") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& ct : partitions(n)) CHECK(dg_square_residual(to_dg_module(build_Mn(n, Permutation::special(ct)))).empty());
}

TEST_CASE("perturbing a_ij breaks d squared") {
  auto K = build_Mn(3);
  K.rows[2].b += P(K.registry(), "x1*u2");
  CHECK(!dg_square_residual(to_dg_module(K)).empty());
}

TEST_CASE("the map M_{n-1} -> M_n") {
  for (int n = 2; n <= 4; ++n) CHECK(phi_chain_map_residual(n).zero());
  auto reg = xyu_registry(3);
  CHECK(!phi_chain_map_residual(3, Poly::constant(reg, 1)).zero());
}

}  // TEST_SUITE
