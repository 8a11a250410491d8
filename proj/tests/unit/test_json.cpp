#include <doctest.h>

#include "../helpers.hpp"
#include "hhh/json_io.hpp"
#include "hhh/schubert.hpp"

using namespace hhh;
using namespace hhh::testing;

TEST_SUITE("json") {

TEST_CASE("polynomial encoding") {
  auto reg = xyu_registry(2);
  Poly p = P(reg, "-3/2*x1^2*u2 + y1 - 7");
  json j = to_json(p);
  REQUIRE(j.is_array());
  CHECK(j.size() == 3);
  bool seen_fraction = false;
  for (const auto& t : j) {
    CHECK(t.at("coeff").is_string());
    if (t.at("coeff") == "-3/2") {
      seen_fraction = true;
      CHECK(t.at("exps") == json{{"x1", 2}, {"u2", 1}});
    }
  }
  CHECK(seen_fraction);
  CHECK(poly_from_json(reg, j) == p);
  CHECK(to_json(Poly(reg)) == json::array());
  std::mt19937 rng(31);
  for (int k = 0; k < 20; ++k) {
    Poly q = random_poly(reg, rng, 4, 5);
    CHECK(poly_from_json(reg, json::parse(to_json(q).dump())) == q);
  }
}

TEST_CASE("quotient encoding") {
  auto reg = x_registry(2);
  Quotient q({reg, {P(reg, "x1^2"), P(reg, "x1*x2")}}, {-2, 1, 0});
  json j = to_json(q);
  CHECK(j.at("vars").size() == 2);
  CHECK(j.at("vars")[0].at("name") == "x1");
  CHECK(j.at("generators").size() == 2);
  CHECK(j.at("groebner").size() == q.basis().size());
  CHECK(j.at("shift") == json{{"q", -2}, {"t", 1}, {"a", 0}});
}

TEST_CASE("reduction traces match the pinned fixtures") {
  for (int n : {2, 3}) {
    std::string pinned = read_file(std::string(HHH_FIXTURE_DIR) + "/mf_simplify_n" + std::to_string(n) + ".json");
    REQUIRE(!pinned.empty());
    CHECK(to_json(mf_simplify(n)).dump(2) + "\n" == pinned);
  }
}

TEST_CASE("tables and series") {
  DimTable t{{{0, 0, 0}, 1}, {{2, 1, 0}, 3}};
  json j = to_json(t);
  REQUIRE(j.size() == 2);
  CHECK(j[1] == json{{"q", 2}, {"t", 1}, {"a", 0}, {"dim", 3}});
  json s = to_json(poincare_series(2, {2}));
  CHECK(s.at("formula") == "q^-2 t (1 + q^-2 a) (1 + q^-4 a) / ((1 - q^2) (1 - q^-4 t^2))");
  CHECK(std::string(kSchema) == "stable-hhh/1");
}

}  // TEST_SUITE
