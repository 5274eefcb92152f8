#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "walks/harmonics.hpp"

using namespace walks;

namespace {
bool close(const Real& a, const Real& b, double tol) {
  return (abs(a - b) < Real(tol) * (Real(1) + abs(b)));
}
}  // namespace

TEST_CASE("gamma and pi sanity") {
  Real::set_working_digits(50);
  Real g = gamma_fn(Real(1) / Real(2));
  CHECK(close(g * g, Real::pi(), 1e-45));
  // Gamma at a negative non-integer argument.
  Real gm = gamma_fn(Real(-3) / Real(4));
  CHECK(gm < Real(0));
  CHECK(close(abs(gm), Real(4.834146544295877), 1e-12));
}

TEST_CASE("boundary coefficients match known values") {
  Real::set_working_digits(50);
  HarmonicBoundary kb = harmonic_boundary(StepSet::named("kreweras"), 20);
  // H_{-1,0} = 9: prefactor (9/2) sqrt(2 + 2) at the origin.
  CHECK(close(kb.hminus[1], Real(9), 1e-40));
  // H_{0,0} = 27 sqrt(3)/4.
  CHECK(close(kb.hdiag[0], Real(27) * sqrt(Real(3)) / Real(4), 1e-40));
  // Quadrant side: h_{0,0} = 9.
  auto qh = quadrant_harmonic_x(StepSet::named("kreweras"), 8);
  CHECK(close(qh[0], Real(9), 1e-40));
  // All positive.
  for (long k = 1; k < 20; ++k) CHECK(kb.hminus[k] > Real(0));
  for (long k = 0; k < 20; ++k) CHECK(kb.hdiag[k] > Real(0));

  // The reverse-kreweras quadrant section is 9/(1-x)^(3/2).
  auto qrk = quadrant_harmonic_x(StepSet::named("reverse-kreweras"), 6);
  CHECK(close(qrk[0], Real(9), 1e-40));
  CHECK(close(qrk[1], Real(27) / Real(2), 1e-40));  // 9 * (3/2)

  // Gessel-side proportionality for the simple model: the squared
  // negative-axis series is a constant multiple of x^2 times the quadrant
  // section, coefficient by coefficient.
  HarmonicBoundary sb = harmonic_boundary(StepSet::named("simple"), 18);
  auto qs = quadrant_harmonic_x(StepSet::named("simple"), 18);
  FSeries hm(std::vector<Real>(sb.hminus.begin(), sb.hminus.end()));
  FSeries sq = hm * hm;
  Real kappa2 = sq.at(2) / qs[0];
  for (long k = 0; k < 14; ++k) {
    CHECK(close(sq.at(k + 2), kappa2 * qs[k], 1e-35));
  }
}

TEST_CASE("harmonic grids: small instances for all five models") {
  for (const char* name : {"kreweras", "reverse-kreweras", "double-kreweras", "simple",
                           "diagonal"}) {
    HarmonicGrid g = harmonic_grid(StepSet::named(name), 8, 40);
    INFO(name);
    CHECK(g.positive);
    CHECK(g.max_residual < Real(1e-20));
    // Symmetry comes from the wedge construction; spot-check anyway.
    CHECK(close(g.values.at({-3, 0}), g.values.at({0, -3}), 1e-30));
    CHECK(close(g.values.at({2, 5}), g.values.at({5, 2}), 1e-30));
    // Zero outside the cone by definition: the grid stores only cone points.
    CHECK(g.values.count({-1, -1}) == 0);
  }
}

TEST_CASE("growth-constant extrapolation, reduced n") {
  // Kreweras excursions with n <= 90 already land within ~12 percent.
  AsymptoticsReport r = asymptotics("kreweras-c00", 90, 30);
  CHECK(r.rel_err < Real(0.15));
  AsymptoticsReport rt = asymptotics("kreweras-total", 90, 30);
  CHECK(rt.rel_err < Real(0.2));
}

TEST_CASE("fit recovers a synthetic two-term law") {
  Real::set_working_digits(40);
  std::vector<std::pair<long, Real>> samples;
  for (long n = 10; n <= 200; ++n) {
    Real u = Real(7) / Real(2) + Real(3) * pow(Real(n), Real(-1) / Real(4)) +
             Real(1) / Real(100) * pow(Real(n), Real(-1) / Real(2));
    samples.push_back({n, u});
  }
  Real a = estimate_limit(samples, Real(1) / Real(4));
  CHECK(close(a, Real(7) / Real(2), 2e-3));
}

TEST_CASE("six-step-model numeric predictions, reduced n") {
  DaPredictions p = da_predictions(60, 40);
  CHECK(close(p.mu, Real(4.7293), 1e-4));
  CHECK(p.mu_residual < Real(1e-30));
  CHECK(close(p.alpha, Real(1.39762), 1e-4));
  CHECK(abs(p.alpha - Real(1.39)) < Real(0.01));
  CHECK(p.alpha_residual < Real(1e-30));
  CHECK(p.seq_gap < Real(0.12));       // converges slowly; tight at n = 150
  CHECK(p.axis_ratio_gap < Real(0.12));
  CHECK(p.kappa_residual < Real(1e-20));
}
