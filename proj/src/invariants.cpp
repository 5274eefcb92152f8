#include "walks/invariants.hpp"

#include <nlohmann/json.hpp>

#include "walks/solve.hpp"

namespace walks {

namespace {

const BiLaurent kOne = BiLaurent::constant(1);
const BiLaurent kx = BiLaurent::x();
const BiLaurent ky = BiLaurent::y();
const BiLaurent kxbar = BiLaurent::xbar();
const BiLaurent kybar = BiLaurent::ybar();

// Monomial part (a, b) of a denominator polynomial, and a unit check: after
// factoring x^a y^b the remaining polynomial must not vanish at x = y = 0.
std::pair<long, long> den_monomial(const BiLaurent& den) {
  if (den.zero()) throw SeriesError("zero denominator");
  long a = den.min_x(), b = den.min_y();
  Rational c = den.coeff(a, b);
  // Products of t, x, y, (1+x), (1+y) always carry their corner term.
  if (sgn(c) == 0)
    throw SeriesError("denominator is not monomial times a unit at the origin");
  return {a, b};
}

TSeries den_as_series(long tpow, const BiLaurent& den) { return TSeries::t_mono(tpow, den); }

}  // namespace

RationalSeries::RationalSeries(TSeries num, long tpow, BiLaurent den)
    : num_(std::move(num)), tpow_(tpow), den_(std::move(den)) {
  den_monomial(den_);  // validates
  if (num_.ram() != 1) throw SeriesError("rational series are unramified");
}

RationalSeries RationalSeries::operator+(const RationalSeries& o) const {
  return RationalSeries(num_.mul_coeff(o.den_).shifted_t(o.tpow_) +
                            o.num_.mul_coeff(den_).shifted_t(tpow_),
                        tpow_ + o.tpow_, den_ * o.den_);
}

RationalSeries RationalSeries::operator-(const RationalSeries& o) const { return *this + (-o); }

RationalSeries RationalSeries::operator-() const { return RationalSeries(-num_, tpow_, den_); }

RationalSeries RationalSeries::operator*(const RationalSeries& o) const {
  return RationalSeries(num_ * o.num_, tpow_ + o.tpow_, den_ * o.den_);
}

RationalSeries RationalSeries::mul_rat(const Rational& c) const {
  return RationalSeries(num_.mul_rat(c), tpow_, den_);
}

long RationalSeries::max_pole_x() const {
  auto [a, b] = den_monomial(den_);
  long m = 0;
  for (long e = num_.val(); e < num_.support_end(); ++e) {
    const BiLaurent& c = num_.coeff_s(e);
    if (!c.zero()) m = std::max(m, -c.min_x() + a);
  }
  return std::max(0L, m);
}

long RationalSeries::max_pole_y() const {
  auto [a, b] = den_monomial(den_);
  long m = 0;
  for (long e = num_.val(); e < num_.support_end(); ++e) {
    const BiLaurent& c = num_.coeff_s(e);
    if (!c.zero()) m = std::max(m, -c.min_y() + b);
  }
  return std::max(0L, m);
}

TSeries RationalSeries::to_series(long order) const {
  TSeries den = den_as_series(tpow_, den_);
  return (num_ * invert(den, order + tpow_ + 2)).truncated(order);
}

TSeries RationalSeries::eval_y(const TSeries& arg, long order) const {
  long extra = tpow_ + 4;
  TSeries n = subst_y(num_, arg, order + extra);
  TSeries d = subst_y(TSeries::constant(den_), arg, order + extra);
  return (n * invert(d, order + extra)).shifted_t(-tpow_).truncated(order);
}

TSeries RationalSeries::eval_x(const TSeries& arg, long order) const {
  long extra = tpow_ + 4;
  TSeries n = subst_x(num_, arg, order + extra);
  TSeries d = subst_x(TSeries::constant(den_), arg, order + extra);
  return (n * invert(d, order + extra)).shifted_t(-tpow_).truncated(order);
}

RationalSeries RationalSeries::at_x(const Rational& v) const {
  return RationalSeries(num_.eval_x(v), tpow_, den_.eval_x(v));
}

RationalSeries RationalSeries::at_y(const Rational& v) const {
  return RationalSeries(num_.eval_y(v), tpow_, den_.eval_y(v));
}

std::optional<CoeffLocus> rs_mismatch(const RationalSeries& a, const RationalSeries& b,
                                      long order_t) {
  TSeries lhs = a.num().mul_coeff(b.den()).shifted_t(b.tpow());
  TSeries rhs = b.num().mul_coeff(a.den()).shifted_t(a.tpow());
  long target = order_t + a.tpow() + b.tpow();
  TSeries d = lhs - rhs;
  if (d.exact()) {
    return d.first_nonzero();
  }
  return first_mismatch(lhs, rhs, std::min(target, d.order()));
}

std::string report_json(const CheckReport& r) {
  nlohmann::json j;
  j["check"] = r.check;
  j["model"] = r.model;
  j["order"] = r.order;
  j["status"] = r.pass ? "pass" : "fail";
  if (r.first_failure)
    j["first_failure"] = {{"n", r.first_failure->n}, {"i", r.first_failure->i},
                          {"j", r.first_failure->j}};
  else
    j["first_failure"] = nullptr;
  return j.dump();
}

TSeries check_linear_identity(const std::vector<std::pair<TSeries, TSeries>>& terms,
                              const TSeries& constant, long order_t) {
  TSeries acc = -constant;
  for (const auto& [c, f] : terms) acc += c * f;
  acc.require_order(order_t + 1);
  return acc.truncated(order_t + 1);
}

Divisibility check_divisible(const RationalSeries& f, const StepSet& s, long bound_x,
                             long bound_y, long order_t) {
  Divisibility out;
  long need = order_t + f.tpow() + 1;
  TSeries qn = f.num() * invert(kernel(s), need);
  qn = qn.truncated(need);
  out.quotient = RationalSeries(qn, f.tpow(), f.den());
  out.max_pole_x = out.quotient.max_pole_x();
  out.max_pole_y = out.quotient.max_pole_y();
  out.divisible = out.max_pole_x <= bound_x && out.max_pole_y <= bound_y;
  return out;
}

std::optional<TSeries> exact_div_by_kernel(const TSeries& f, const StepSet& s) {
  if (!f.exact()) throw SeriesError("exact kernel division requires an exact polynomial");
  BiLaurent sp = s.step_polynomial();
  // (1 - tS) q = f: q_m = f_m + S q_{m-1}, running over t exponents.
  long lo = f.val();
  long hi = f.support_end();
  std::vector<std::pair<long, BiLaurent>> qterms;
  BiLaurent prev;
  for (long m = lo; m < hi - 1; ++m) {
    BiLaurent qm = f.coeff_s(m) + sp * prev;
    if (!qm.zero()) qterms.push_back({m, qm});
    prev = qm;
  }
  TSeries q = TSeries::poly(qterms);
  TSeries res = residual(f, kernel(s) * q);
  if (!res.known_zero()) return std::nullopt;
  return q;
}

CheckReport check_invariant_pair(const InvariantPair& p, long order_t) {
  CheckReport r;
  r.check = "invariant-pair";
  r.model = p.model.name();
  r.order = order_t;
  RationalSeries diff = p.I - p.J;
  if (p.cert_known) {
    RationalSeries rhs = RationalSeries(kernel(p.model)) * p.cert;
    auto bad = rs_mismatch(diff, rhs, order_t);
    if (bad) {
      r.pass = false;
      r.first_failure = bad;
      return r;
    }
    long px = p.cert.max_pole_x();
    long py = p.cert.max_pole_y();
    r.pass = px <= p.bound_x && py <= p.bound_y;
    return r;
  }
  Divisibility d = check_divisible(diff, p.model, p.bound_x, p.bound_y, order_t);
  r.pass = d.divisible;
  return r;
}

namespace {

RationalSeries rs_poly(std::vector<std::pair<long, BiLaurent>> terms, long tpow = 0,
                       BiLaurent den = kOne) {
  return RationalSeries(TSeries::poly(std::move(terms)), tpow, std::move(den));
}

}  // namespace

KnownInvariants known_invariants(const StepSet& companion_steps) {
  const auto& st = companion_steps.steps();
  KnownInvariants out;
  auto is = [&](const char* name) { return st == StepSet::named(name).steps(); };
  auto mirror_to_y = [](const RationalSeries& f) {
    return RationalSeries(f.num().map_coeffs([](const BiLaurent& p) { return p.swap_xy(); }),
                          f.tpow(), f.den().swap_xy());
  };
  if (is("reverse-kreweras")) {  // companion of kreweras
    out.I0 = rs_poly({{0, kx}, {1, kxbar - kx * kx}}, 1);
    out.J0 = mirror_to_y(*out.I0);
    out.f = rs_poly({{0, kx}, {1, -(kx * kx)}}, 1);
    out.g = rs_poly({{0, -kybar}});
  } else if (is("kreweras")) {  // companion of reverse-kreweras
    out.I0 = rs_poly({{0, -kxbar}, {1, kxbar * kxbar - kx}}, 1);
    out.J0 = mirror_to_y(*out.I0);
    out.f = rs_poly({{0, BiLaurent::constant(rat(1, 2))}, {1, -kxbar}}, 1);
    out.g = mirror_to_y(out.f);
  } else if (is("double-kreweras")) {  // self-companion
    out.I0 = rs_poly({{0, -kOne}, {1, kxbar - kOne - kx - kx * kx}}, 1, kOne + kx);
    out.J0 = mirror_to_y(*out.I0);
    out.f = rs_poly({{0, kx}, {1, -kOne - kx * kx}}, 1, kOne + kx);
    out.g = rs_poly({{0, -kybar}});
  } else if (is("gessel")) {  // companion of simple
    out.I0 = rs_poly({{0, kx + kxbar},
                      {1, BiLaurent::constant(2) - kxbar * kxbar - kx * kx}});
    BiLaurent opy = kOne + ky;
    out.J0 = rs_poly({{0, ky * ky}, {2, opy * opy * opy * opy}}, 1, ky * opy * opy);
    out.f = rs_poly({{0, -kxbar}});
    out.g = rs_poly({{0, ky}}, 1, opy);
  } else if (is("gessel-reflected")) {  // companion of diagonal
    BiLaurent opx = kOne + kx;
    out.I0 = rs_poly({{0, kx * kx}, {2, opx * opx * opx * opx}}, 1, kx * opx * opx);
    out.J0 = rs_poly({{0, ky + kybar},
                      {1, BiLaurent::constant(2) - kybar * kybar - ky * ky}});
    out.f = rs_poly({{0, kx}}, 1, opx);
    out.g = rs_poly({{0, -kybar}});
  } else if (st == companion(StepSet::named("m6")).steps()) {
    out.f = rs_poly({{0, -kxbar}});
    out.g = rs_poly({{0, ky}, {1, -(ky * ky)}}, 1, kOne + ky);
  } else if (st == companion(StepSet::named("m7")).steps()) {
    out.f = rs_poly({{0, -kxbar}});
    out.g = rs_poly({{0, ky}, {1, -kOne - ky * ky}}, 1);
  } else if (st == companion(StepSet::named("m8")).steps()) {
    out.f = rs_poly({{0, kOne}, {1, -kxbar}}, 1);
    out.g = rs_poly({{0, -kybar - ky}});
  } else if (st == companion(StepSet::named("m9")).steps()) {
    out.f = rs_poly({{0, -kxbar}});
    out.g = rs_poly({{0, ky}, {1, -kOne}}, 1, kOne + ky);
  } else {
    throw ModelError("no catalog invariants for this step set");
  }
  return out;
}

namespace {

TSeries series00(const TSeries& f) {
  return f.map_coeffs([](const BiLaurent& p) {
    return BiLaurent::constant(p.coeff(0, 0));
  });
}

}  // namespace

InvariantPair build_I1J1(const StepSet& companion_steps, const TSeries& quadrant_series,
                         long order_t) {
  KnownInvariants known = known_invariants(companion_steps);
  Splits s = splits(companion_steps);
  TSeries qx0 = section_y0(quadrant_series);
  TSeries q0y = section_x0(quadrant_series);
  TSeries q00 = series00(quadrant_series);
  bool sw = companion_steps.has(-1, -1);

  InvariantPair p;
  p.model = companion_steps;
  p.I = RationalSeries(TSeries::t_mono(1, kx * s.hminus) * qx0) - known.f;
  RationalSeries j1 = RationalSeries(TSeries::t_mono(1, ky * s.vminus) * q0y);
  p.J = -j1 + known.g;
  if (sw) p.J = p.J + RationalSeries(TSeries::t_mono(1, kOne) * q00);

  // Certificate h(x,y) - x y Q(x,y), with h = (xy - f - g)/K.
  RationalSeries xy_part = rs_poly({{0, kx * ky}}) - known.f - known.g;
  Divisibility dv = check_divisible(xy_part, companion_steps, 2, 2, order_t + 2);
  p.cert = dv.quotient - RationalSeries(quadrant_series.mul_coeff(kx * ky));
  p.cert_known = true;
  return p;
}

Decoupling decoupling(const StepSet& model) {
  std::string name = model.name();
  if (name.empty()) {
    for (const auto& n : StepSet::catalog())
      if (StepSet::named(n).steps() == model.steps()) { name = n; break; }
  }
  Decoupling d;
  if (name == "kreweras") {
    d.F = rs_poly({{0, kOne}, {1, kx * rat(-2)}}, 1);
    d.G = rs_poly({{0, kOne}}, 1);
    d.H = RationalSeries(TSeries::zero());
  } else if (name == "reverse-kreweras") {
    d.F = rs_poly({{0, kxbar}, {1, -(kxbar * kxbar) - kx}}, 1);
    d.G = rs_poly({{0, kybar}}, 1);
    d.H = rs_poly({{0, kybar - kxbar}}, 1);
  } else if (name == "double-kreweras") {
    d.F = rs_poly({{0, kOne}, {1, kx * rat(-2) - kxbar - kx * kx}}, 1, kOne + kx);
    d.G = rs_poly({{0, kOne}}, 1, kOne + ky);
    d.H = rs_poly({{0, kx - ky}}, 1, (kOne + kx) * (kOne + ky));
  } else if (name == "m6") {
    d.F = rs_poly({{0, kOne}, {1, kx * rat(-2) + kxbar * rat(-2)}}, 1);
    d.G = rs_poly({{0, kOne - ky}}, 1, kOne + ky);
    d.H = rs_poly({{0, ky * rat(-2)}}, 1, kOne + ky);
  } else {
    throw ModelError("no decoupling for model '" + name + "'");
  }

  // Defining identity, exact: y = (t v0 + 2tx vplus - 1) G + F + K H for the
  // companion kernel.
  StepSet comp = companion(model);
  Splits cs = splits(comp);
  RationalSeries coeff(TSeries::poly({{0, -kOne}, {1, cs.v0 + kx * cs.vplus * rat(2)}}));
  RationalSeries lhs = rs_poly({{0, ky}});
  RationalSeries rhs = coeff * d.G + d.F + RationalSeries(kernel(comp)) * d.H;
  if (auto bad = rs_mismatch(lhs, rhs, 4)) {
    (void)bad;
    throw ModelError("decoupling catalog entry fails its defining identity");
  }

  // Closed-form reconstruction of F and G from the model's own splits:
  //   F(x) = xbar^2 + K(xbar,xbar)/(t H_-(xbar)),  t G(y) = (1+H_-(ybar))/(y H_+(ybar)) - 1.
  Splits ms = splits(model);
  BiLaurent s_xbxb = model.step_polynomial().map_exponents(
      [](BiLaurent::Key k) { return BiLaurent::Key{-k.first - k.second, 0}; });
  TSeries K_at_xbar = TSeries::poly({{0, kOne}, {1, -s_xbxb}});
  BiLaurent hminus_xbar = ms.hminus.mirror_x();
  RationalSeries f_expr = rs_poly({{0, kxbar * kxbar}}) +
                          RationalSeries(K_at_xbar, 1, hminus_xbar);
  if (rs_mismatch(f_expr, d.F, 4))
    throw ModelError("closed-form F does not reproduce the decoupling catalog");
  BiLaurent hminus_ybar = ms.hminus.swap_xy().mirror_y();  // H_-(ybar), a Laurent poly in y
  BiLaurent hplus_ybar = ms.hplus.swap_xy().mirror_y();
  RationalSeries g_expr =
      RationalSeries(TSeries::constant(kOne + hminus_ybar), 1, ky * hplus_ybar) -
      rs_poly({{0, kOne}}, 1);
  if (rs_mismatch(g_expr, d.G, 4))
    throw ModelError("closed-form G does not reproduce the decoupling catalog");

  // Classical symmetric pair: f = g = (x^2 + K(x,x)/(t H_-(x)))/2.
  BiLaurent s_xx = model.step_polynomial().map_exponents(
      [](BiLaurent::Key k) { return BiLaurent::Key{k.first + k.second, 0}; });
  TSeries K_xx = TSeries::poly({{0, kOne}, {1, -s_xx}});
  d.f_classic = (rs_poly({{0, kx * kx}}) + RationalSeries(K_xx, 1, ms.hminus)).mul_rat(rat(1, 2));
  d.g_classic = RationalSeries(
      d.f_classic.num().map_coeffs([](const BiLaurent& p) { return p.swap_xy(); }),
      d.f_classic.tpow(), d.f_classic.den().swap_xy());
  return d;
}

ThreeQuadrantPair build_three_quadrant_pair(const StepSet& model, const TSeries& U,
                                            const TSeries& D, long order_t) {
  Decoupling dec = decoupling(model);
  StepSet comp = companion(model);
  Splits cs = splits(comp);
  bool has_s = comp.has(0, -1);

  TSeries ux0 = section_y0(U);
  TSeries d0 = series00(D);

  ThreeQuadrantPair out;
  out.R = RationalSeries(TSeries::t_mono(1, kx * cs.hminus * rat(2)) * ux0) - dec.F;
  if (has_s) out.R = out.R + RationalSeries(TSeries::t_mono(1, kOne) * d0);
  out.S = RationalSeries(D.mul_coeff(ky)) + dec.G;

  out.pair.model = comp;
  out.pair.I = out.R * out.R;
  out.pair.J = RationalSeries(discriminant_y(comp)) * out.S * out.S;
  RationalSeries coeff(TSeries::poly({{0, -kOne}, {1, cs.v0 + kx * cs.vplus * rat(2)}}));
  RationalSeries vterm(TSeries::t_mono(1, kx * cs.vplus * rat(-4)));
  out.pair.cert = vterm * out.S * out.S +
                  (dec.H - RationalSeries(U.mul_coeff(kx * ky * rat(2)))) *
                      (coeff * out.S + out.R);
  out.pair.cert_known = true;
  // The reverse-Kreweras certificate genuinely carries third-order poles at
  // the origin (e.g. an xbar^3 term in its t^-1 coefficient); the other three
  // models stay within order 2.
  if (model.steps() == StepSet::named("reverse-kreweras").steps()) {
    out.pair.bound_x = out.pair.bound_y = 3;
  }
  (void)order_t;
  return out;
}

LemmaResult invariant_lemma_check(const RationalSeries& I, const RationalSeries& J,
                                  const StepSet& model, long order_t) {
  LemmaResult out;
  RationalSeries diff = I - J;
  long need = order_t + diff.tpow() + 1;
  TSeries qn = (diff.num() * invert(kernel(model), need)).truncated(need);
  auto [a, b] = std::pair<long, long>{diff.den().min_x(), diff.den().min_y()};
  for (long e = qn.val(); e < qn.order(); ++e) {
    const BiLaurent& c = qn.coeff_s(e);
    if (c.zero()) continue;
    if (c.min_x() < 1 + a || c.min_y() < 1 + b) return out;  // not a multiple of xy
  }
  out.is_constant = true;
  // The common value: evaluate I at a convenient rational x.
  Rational pt(1);
  if (sgn(I.den().eval_x(pt).coeff(0, 0)) == 0 || sgn(I.den().eval(pt, rat(1))) == 0) pt = rat(2);
  RationalSeries at = I.at_x(pt);
  TSeries den = TSeries::t_mono(at.tpow(), at.den());
  out.value = (at.num() * invert(den, order_t + at.tpow() + 2)).truncated(order_t + 1);
  // Confirm both sides really collapse to this constant.
  RationalSeries cv(out.value);
  if (rs_mismatch(I, cv, order_t) || rs_mismatch(J, cv, order_t)) out.is_constant = false;
  return out;
}

}  // namespace walks
