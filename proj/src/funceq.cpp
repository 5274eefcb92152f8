#include "walks/funceq.hpp"

#include "walks/solve.hpp"

namespace walks {

namespace {

const BiLaurent kOne = BiLaurent::constant(1);
const BiLaurent kx = BiLaurent::x();
const BiLaurent ky = BiLaurent::y();
const BiLaurent kxbar = BiLaurent::xbar();
const BiLaurent kybar = BiLaurent::ybar();

TSeries series00(const TSeries& f) {
  return f.map_coeffs([](const BiLaurent& p) { return BiLaurent::constant(p.coeff(0, 0)); });
}

CheckReport from_residual(const std::string& check, const StepSet& m, long order_t,
                          const TSeries& res) {
  CheckReport r;
  r.check = check;
  r.model = m.name();
  r.order = order_t;
  r.first_failure = first_mismatch(res, TSeries::zero(), order_t + 1);
  r.pass = !r.first_failure.has_value();
  return r;
}

// C(x,y) and its boundary sections for the three-quadrant equation.
CheckReport check_base(const StepSet& m, long order_t) {
  TSeries c = walk_series(m, Region::kThreeQuadrant, order_t + 2);
  Splits s = splits(m);
  TSeries cmx = boundary_cminus_x(c);   // polynomial in x
  TSeries cmy = boundary_cminus_y(c);   // polynomial in y
  TSeries c00 = series00(c);
  TSeries cm_at_xbar = cmx.map_coeffs([](const BiLaurent& p) { return p.mirror_x(); });
  TSeries cm_at_ybar = cmy.map_coeffs([](const BiLaurent& p) { return p.mirror_y(); });
  BiLaurent hminus_y = s.hminus.swap_xy();  // H_-(y)
  TSeries rhs = TSeries::constant(1) - TSeries::t_mono(1, kybar * s.hminus) * cm_at_xbar -
                TSeries::t_mono(1, kxbar * hminus_y) * cm_at_ybar;
  if (m.has(-1, -1)) rhs -= TSeries::t_mono(1, kxbar * kybar) * c00;
  TSeries res = kernel(m) * c - rhs;
  return from_residual("base", m, order_t, res);
}

struct SplitSeries {
  TSeries U, D, Ux0, U0y, D0, U00;
};

SplitSeries split_for(const StepSet& m, long order_t) {
  TSeries c = walk_series(m, Region::kThreeQuadrant, order_t + 2);
  DiagonalSplit ud = split_UD(c, m);
  SplitSeries out;
  out.U = ud.U;
  out.D = ud.D;
  out.Ux0 = section_y0(ud.U);
  out.U0y = section_x0(ud.U);
  out.D0 = series00(ud.D);
  out.U00 = series00(ud.U);
  return out;
}

CheckReport check_equ(const StepSet& m, long order_t) {
  StepSet comp = companion(m);
  Splits cs = splits(comp);
  SplitSeries sp = split_for(m, order_t);
  TSeries coeff = TSeries::poly({{0, -ky}, {1, ky * cs.v0 + kx * ky * cs.vplus * rat(2)}});
  TSeries rhs = TSeries::constant(ky) + coeff * sp.D -
                TSeries::t_mono(1, kx * cs.hminus * rat(2)) * sp.Ux0;
  if (comp.has(0, -1)) rhs -= TSeries::t_mono(1, kOne) * sp.D0;
  TSeries lhs = (kernel(comp) * sp.U).mul_coeff(kx * ky * rat(2));
  return from_residual("eq-u", m, order_t, lhs - rhs);
}

CheckReport check_eqd(const StepSet& m, long order_t) {
  StepSet comp = companion(m);
  Splits cs = splits(comp);
  SplitSeries sp = split_for(m, order_t);
  TSeries lhs = TSeries::one_minus_t(cs.v0) * sp.D;
  TSeries rhs = TSeries::constant(1) + TSeries::t_mono(1, cs.vminus * rat(2)) * sp.U0y;
  if (comp.has(0, -1)) rhs -= TSeries::t_mono(1, kybar) * sp.D0;
  if (comp.has(-1, -1)) rhs -= TSeries::t_mono(1, kybar * rat(2)) * sp.U00;
  return from_residual("eq-d", m, order_t, lhs - rhs);
}

CheckReport check_quadrant(const StepSet& m, long order_t) {
  StepSet comp = companion(m);
  Splits cs = splits(comp);
  TSeries q = walk_series(comp, Region::kQuadrant, order_t + 2);
  TSeries qx0 = section_y0(q);
  TSeries q0y = section_x0(q);
  TSeries q00 = series00(q);
  TSeries lhs = (kernel(comp) * q).mul_coeff(kx * ky);
  TSeries rhs = TSeries::constant(kx * ky) - TSeries::t_mono(1, kx * cs.hminus) * qx0 -
                TSeries::t_mono(1, ky * cs.vminus) * q0y;
  if (comp.has(-1, -1)) rhs += TSeries::t_mono(1, kOne) * q00;
  return from_residual("quadrant", m, order_t, lhs - rhs);
}

// Scarecrow: the diagonal split still applies; the combined equation has a
// degree-2 kernel, and the two raw step equations involve the first x-section
// of U.
std::vector<CheckReport> check_scarecrow(const StepSet& m, long order_t) {
  TSeries c = walk_series(m, Region::kThreeQuadrant, order_t + 2);
  DiagonalSplit ud = split_UD(c, m);
  TSeries U = ud.U, D = ud.D;
  TSeries ux0 = section_y0(U);
  TSeries u0y = section_x0(U);
  TSeries u00 = series00(U);
  std::vector<CheckReport> out;

  // Combined equation: 2xy K U = y + y(ty + 2tx(1+xy) - 1) D
  //                    - 2t(1+xbar) U(x,0) + 2t xy U(0,y) - 2t xbar (U(0,y) - U00).
  // The NW jump from the subdiagonal into the upper wedge stays inside the
  // cone even when it starts at (0,-1), so U(0,y) enters the xy-term in full.
  BiLaurent ks = kx + kxbar * kybar + ky + kxbar * kxbar * kybar + kx * kx * ky;
  TSeries kern = TSeries::one_minus_t(ks);
  TSeries coeff = TSeries::poly({{0, -ky}, {1, ky * ky + kx * ky * (kOne + kx * ky) * rat(2)}});
  TSeries rhs = TSeries::constant(ky) + coeff * D -
                TSeries::t_mono(1, (kOne + kxbar) * rat(2)) * ux0 +
                TSeries::t_mono(1, kx * ky * rat(2)) * u0y -
                TSeries::t_mono(1, kxbar * rat(2)) * (u0y - u00);
  TSeries lhs = (kern * U).mul_coeff(kx * ky * rat(2));
  out.push_back(from_residual("system-combined", m, order_t, lhs - rhs));

  // Raw equations in the original variables, via monomial substitutions.
  auto sub_diag = [](const TSeries& f) {  // g(y) -> g(xy)
    return f.map_coeffs([](const BiLaurent& p) {
      return p.map_exponents([](BiLaurent::Key k) { return BiLaurent::Key{k.second, k.second}; });
    });
  };
  TSeries u1y = U.map_coeffs([](const BiLaurent& p) {
    return p.filter([](long i, long) { return i == 1; })
        .map_exponents([](BiLaurent::Key k) { return BiLaurent::Key{0, k.second}; });
  });
  TSeries u10 = series00(section_y0(u1y));
  TSeries d_xy = sub_diag(D);
  TSeries u0_xy = sub_diag(u0y);
  TSeries u1_xy = sub_diag(u1y);
  // xbar U(xbar, xy): the above-diagonal part of C.
  TSeries above = c.map_coeffs([](const BiLaurent& p) {
    return p.filter([](long i, long j) { return j > i; });
  });
  TSeries ux_bar0 = ux0.map_coeffs([](const BiLaurent& p) { return p.mirror_x(); });

  TSeries res1 = d_xy - TSeries::constant(1) - TSeries::t_mono(1, kx * ky) * d_xy -
                 TSeries::t_mono(1, kxbar * kybar * rat(2)) * (u0_xy - u00) -
                 TSeries::t_mono(1, kx * kybar * kxbar * kxbar * rat(2)) * (u1_xy - u10);
  out.push_back(from_residual("system-diagonal", m, order_t, res1));

  // The NW entry from the subdiagonal is legal even from (0,-1), hence the
  // full xbar*y*ybar*U(0,xy) term with no constant removed.
  TSeries res2 = TSeries::one_minus_t(m.step_polynomial()) * above -
                 TSeries::t_mono(1, kxbar * (kOne + ky)) * d_xy -
                 TSeries::t_mono(1, kxbar) * u0_xy +
                 TSeries::t_mono(1, kybar * (kOne + kx) * kxbar) * (ux_bar0 + u0_xy - u00) +
                 TSeries::t_mono(1, kx * kybar * kxbar * kxbar) * (u1_xy - u10);
  out.push_back(from_residual("system-above", m, order_t, res2));
  return out;
}

// Gessel steps without the diagonal symmetry: three series U, D, L.
std::vector<CheckReport> check_asymmetric(const StepSet& m, long order_t) {
  TSeries c = walk_series(m, Region::kThreeQuadrant, order_t + 2);
  DiagonalSplit ud = split_UD(c, m);
  TSeries U = ud.U, D = ud.D, L = *ud.L;
  TSeries ux0 = section_y0(U);
  TSeries u0y = section_x0(U);
  TSeries lx0 = section_y0(L);
  TSeries l0y = section_x0(L);
  TSeries l00 = series00(L);
  TSeries d0 = series00(D);
  std::vector<CheckReport> out;

  BiLaurent su = kx + kxbar + ky + kybar;            // S(xbar, xy)
  BiLaurent sl = ky + kybar + kx * ky + kxbar * kybar;  // S(xy, xbar)

  TSeries res_u = (TSeries::one_minus_t(su) * U).mul_coeff(kx) -
                  TSeries::t_mono(1, kx) * D + TSeries::t_mono(1, kx * kybar) * ux0 +
                  TSeries::t_mono(1, kOne) * u0y;
  out.push_back(from_residual("system-upper", m, order_t, res_u));

  TSeries res_d = TSeries::one_minus_t(ky + kybar) * D - TSeries::constant(1) +
                  TSeries::t_mono(1, kybar) * d0 - TSeries::t_mono(1, kOne) * u0y -
                  TSeries::t_mono(1, kybar) * (l0y - l00);
  out.push_back(from_residual("system-diagonal", m, order_t, res_d));

  TSeries res_l = (TSeries::one_minus_t(sl) * L).mul_coeff(kx) -
                  TSeries::t_mono(1, kx * ky) * D +
                  TSeries::t_mono(1, kybar * (kOne + kx)) * lx0 +
                  TSeries::t_mono(1, kybar) * (l0y - l00);
  out.push_back(from_residual("system-lower", m, order_t, res_l));
  return out;
}

}  // namespace

std::vector<CheckReport> check_funceqs(const StepSet& model, long order_t,
                                       const std::string& which) {
  std::string name = model.name();
  std::vector<CheckReport> out;
  auto want = [&](const char* w) { return which == "all" || which == w; };
  if (name == "scarecrow") {
    if (want("system")) return check_scarecrow(model, order_t);
    throw ModelError("scarecrow supports only the 'system' check");
  }
  if (name == "gessel-asymmetric") {
    if (want("system")) return check_asymmetric(model, order_t);
    throw ModelError("gessel-asymmetric supports only the 'system' check");
  }
  // The split equations apply to any diagonally symmetric set without NW or
  // SE steps, plus the diagonal model through its half-step companion.
  bool diag = model.steps() == StepSet::named("diagonal").steps();
  bool eligible = diag || (model.diagonally_symmetric() && !model.has(1, -1) && !model.has(-1, 1));
  if (!eligible)
    throw ModelError("functional-equation checks need a diagonally symmetric model "
                     "without NW/SE steps (or one of the two special systems)");
  if (want("base")) out.push_back(check_base(model, order_t));
  if (want("eq-u")) out.push_back(check_equ(model, order_t));
  if (want("eq-d")) out.push_back(check_eqd(model, order_t));
  if (want("quadrant")) out.push_back(check_quadrant(model, order_t));
  if (out.empty()) throw ModelError("unknown functional-equation selector '" + which + "'");
  return out;
}

}  // namespace walks
