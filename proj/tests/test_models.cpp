#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "walks/models.hpp"

using namespace walks;

namespace {
const BiLaurent kx = BiLaurent::x();
const BiLaurent ky = BiLaurent::y();
const BiLaurent kxbar = BiLaurent::xbar();
const BiLaurent kybar = BiLaurent::ybar();
const BiLaurent k1 = BiLaurent::constant(1);
}  // namespace

TEST_CASE("catalog names and step sets") {
  CHECK(StepSet::catalog().size() == 13);
  CHECK(StepSet::named("kreweras").step_polynomial() == kx * ky + kxbar + kybar);
  CHECK(StepSet::named("reverse-kreweras").step_polynomial() == kx + ky + kxbar * kybar);
  CHECK(StepSet::named("m6").step_polynomial() == kx + kxbar + ky + kybar + kx * ky);
  CHECK(StepSet::named("scarecrow").step_polynomial() ==
        kx * ky + kxbar * ky + kxbar + kybar + kx * kybar);
  CHECK(StepSet::named("gessel").steps() == StepSet::named("gessel-asymmetric").steps());
  CHECK_THROWS_AS(StepSet::named("nope"), ModelError);
  CHECK_THROWS_AS(StepSet(std::set<Step>{{2, 0}}), ModelError);
  CHECK_THROWS_AS(StepSet(std::set<Step>{}), ModelError);
}

TEST_CASE("companion transformation") {
  CHECK(companion(StepSet::named("kreweras")).steps() ==
        StepSet::named("reverse-kreweras").steps());
  CHECK(companion(StepSet::named("reverse-kreweras")).steps() ==
        StepSet::named("kreweras").steps());
  // Fixed point: double Kreweras maps to itself.
  CHECK(companion(StepSet::named("double-kreweras")).steps() ==
        StepSet::named("double-kreweras").steps());
  // Involution on the trilogy.
  CHECK(companion(companion(StepSet::named("kreweras"))).steps() ==
        StepSet::named("kreweras").steps());
  CHECK(companion(StepSet::named("simple")).steps() == StepSet::named("gessel").steps());
  // The diagonal model maps through half steps.
  StepSet dc = companion(StepSet::named("diagonal"));
  CHECK(dc.step_polynomial() == kx * ky + ky + kxbar * kybar + kybar);
  CHECK_THROWS_AS(companion(StepSet::named("scarecrow")), ModelError);
  // Companion step polynomial equals S(1/x, x*y) for standard models.
  for (const char* name : {"kreweras", "reverse-kreweras", "double-kreweras", "simple",
                           "m6", "m7", "m8", "m9"}) {
    StepSet m = StepSet::named(name);
    CHECK(companion(m).step_polynomial() == m.step_polynomial().companion_exponents());
  }
}

TEST_CASE("splits recompose the step polynomial") {
  for (const auto& name : StepSet::catalog()) {
    StepSet m = StepSet::named(name);
    Splits s = splits(m);
    BiLaurent horiz = kybar * s.hminus + s.h0 + ky * s.hplus;
    BiLaurent vert = kxbar * s.vminus + s.v0 + kx * s.vplus;
    CHECK(horiz == m.step_polynomial());
    CHECK(vert == m.step_polynomial());
  }
  // Read-off examples.
  Splits rk = splits(StepSet::named("reverse-kreweras"));
  CHECK(rk.hminus == kxbar);
  CHECK(rk.h0 == kx);
  CHECK(rk.hplus == k1);
  Splits kw = splits(StepSet::named("kreweras"));
  CHECK(kw.hminus == k1);
  CHECK(kw.h0 == kxbar);
  CHECK(kw.hplus == kx);
  // Companion of m6: coefficient of x in its step polynomial is 1 + y.
  Splits m6c = splits(companion(StepSet::named("m6")));
  CHECK(m6c.vplus == k1 + ky);
}

TEST_CASE("kernel and discriminant") {
  StepSet rk_steps = companion(StepSet::named("kreweras"));  // {E, N, SW}
  TSeries delta = discriminant_y(rk_steps);
  // (1 - t*y)^2 - 4t^2*ybar
  TSeries expect = TSeries::one_minus_t(ky) * TSeries::one_minus_t(ky) -
                   TSeries::t_mono(2, kybar * rat(4));
  CHECK(residual(delta, expect).known_zero());

  StepSet m6c = companion(StepSet::named("m6"));
  TSeries delta6 = discriminant_y(m6c);
  TSeries expect6 = TSeries::one_minus_t(ky) * TSeries::one_minus_t(ky) -
                    TSeries::t_mono(2, kybar * (k1 + ky) * (k1 + ky) * rat(4));
  CHECK(residual(delta6, expect6).known_zero());
}

TEST_CASE("kernel square identity for all catalog models") {
  // (t*v0 + 2tx*vplus - 1)^2 = Delta(y) - 4tx*vplus*K(x,y), exactly.
  for (const auto& name : StepSet::catalog()) {
    StepSet m = StepSet::named(name);
    Splits s = splits(m);
    TSeries lhs = TSeries::t_mono(1, s.v0) + TSeries::t_mono(1, kx * s.vplus * rat(2)) -
                  TSeries::constant(1);
    lhs = lhs * lhs;
    TSeries rhs = discriminant_y(m) -
                  TSeries::t_mono(1, kx * s.vplus * rat(4)) * kernel(m);
    CHECK(residual(lhs, rhs).known_zero());
  }
}
