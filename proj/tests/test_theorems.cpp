#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "walks/theorems.hpp"

using namespace walks;

TEST_CASE("every catalogued identity verifies at a moderate order") {
  for (const auto& id : theorem_ids()) {
    auto checks = verify_theorem(id, 9);
    REQUIRE(!checks.empty());
    for (const auto& c : checks) {
      INFO(id, " / ", c.id);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("order zero is consistent by construction") {
  for (const char* id : {"K-U", "K-D"}) {
    for (const auto& c : verify_theorem(id, 0)) CHECK(c.pass);
  }
}

TEST_CASE("an injected fault is localized") {
  // Perturbing the boundary series by t^5 must break the boundary identity
  // with a residual first seen at t^5.
  long order = 8;
  StepSet m = StepSet::named("kreweras");
  TSeries cc = walk_series(m, Region::kThreeQuadrant, order + 8);
  TSeries cm = boundary_cminus_x(cc) + TSeries::t_mono(5, rat(1)).truncated(order + 8);
  TSeries inner = TSeries::t_mono(1, BiLaurent::xbar()) * cm + TSeries::constant(BiLaurent::x()) -
                  TSeries::t_mono(-1, rat(1, 2));
  TSeries lhs = (inner * inner).mul_rat(rat(2));
  // Healthy right-hand side from the intact series.
  TSeries cm_ok = boundary_cminus_x(cc);
  TSeries inner_ok = TSeries::t_mono(1, BiLaurent::xbar()) * cm_ok +
                     TSeries::constant(BiLaurent::x()) - TSeries::t_mono(-1, rat(1, 2));
  TSeries rhs = (inner_ok * inner_ok).mul_rat(rat(2));
  auto bad = first_mismatch(lhs, rhs, order);
  REQUIRE(bad.has_value());
  CHECK(bad->n == 5);
}

TEST_CASE("theorem json shape") {
  auto checks = verify_theorem("K-C11", 6);
  REQUIRE(!checks.empty());
  std::string j = theorem_json(checks.front());
  CHECK(j.find("\"status\":\"pass\"") != std::string::npos);
  CHECK(j.find("\"residual_locus\":null") != std::string::npos);
  CHECK_THROWS_AS(verify_theorem("NOPE", 4), ModelError);
}
