#include "walks/solve.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace walks {

namespace {

// Smallest s exponent with a nonzero known coefficient, or order if none.
long true_val(const TSeries& f) {
  auto loc = f.first_nonzero();
  if (loc) return loc->n;
  return f.exact() ? TSeries::kExact : f.order();
}

}  // namespace

TSeries eval_poly(const SeriesPoly& p, const TSeries& u) {
  if (p.empty()) return TSeries::zero();
  TSeries r = p.back();
  for (long k = static_cast<long>(p.size()) - 2; k >= 0; --k) r = r * u + p[k];
  return r;
}

SeriesPoly derivative(const SeriesPoly& p) {
  SeriesPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k].mul_rat(rat(static_cast<long>(k))));
  if (d.empty()) d.push_back(TSeries::zero());
  return d;
}

TSeries newton_solve(const SeriesPoly& p, const TSeries& seed, long order) {
  SeriesPoly dp = derivative(p);
  TSeries y = seed;
  TSeries res = eval_poly(p, y);
  long e = true_val(res);
  long d = true_val(eval_poly(dp, y));
  if (e >= TSeries::kExact / 2) {
    // Seed already an exact root.
  } else if (d >= TSeries::kExact / 2 || e <= 2 * d) {
    throw SolveError("ramification needed or root not simple (Newton condition fails)");
  }
  long slack = 6;
  long dmax = std::max(0L, d >= TSeries::kExact / 2 ? 0 : d);
  long work = order + 2 * dmax + slack;
  long inv_target = order + dmax + slack;
  long last_val = e;
  for (int iter = 0; iter < 64; ++iter) {
    res = eval_poly(p, y);
    long known = res.exact() ? order : std::min(order, res.order());
    long ev = true_val(res);
    if (ev >= known) {
      if (known < order)
        throw SolveError("Newton iteration lost precision before reaching the target order");
      break;
    }
    if (iter > 0 && ev <= last_val)
      throw SolveError("ramification needed or root not simple (Newton stalled)");
    last_val = ev;
    TSeries der = eval_poly(dp, y);
    TSeries corr = res * invert(der, inv_target);
    y = (y - corr).truncated(work);
  }
  TSeries final_res = eval_poly(p, y);
  long fv = true_val(final_res);
  if (fv < order) throw SolveError("back-substitution residual nonzero");
  TSeries out = y.truncated(order);
  out.require_order(order);
  return out;
}

const TSeries& AlgSeries::expansion(long order) const {
  if (!have_ || cache_.order() < order) {
    cache_ = newton_solve(eq_, seed_, order);
    have_ = true;
  }
  return cache_;
}

namespace {

TSeries subst_one_var(const TSeries& f0, const TSeries& arg0, long order, bool on_y) {
  int r = std::lcm(f0.ram(), arg0.ram());
  TSeries f = f0.lifted(r), arg = arg0.lifted(r);
  if (arg.known_zero() || true_val(arg) <= 0)
    throw SolveError("substitution argument must have positive valuation");
  long v = true_val(arg);
  long pole = on_y ? f.max_pole_y() : f.max_pole_x();
  long deg = 0;
  for (long e = f.val(); e < f.support_end(); ++e) {
    const BiLaurent& c = f.coeff_s(e);
    if (!c.zero()) deg = std::max(deg, on_y ? c.max_y() : c.max_x());
  }
  if (!f.exact() && f.order() < order + v * pole)
    throw SeriesError("insufficient truncation for substitution");
  // Precompute powers of the argument.
  std::map<long, TSeries> pw;
  pw[0] = TSeries::constant(1).lifted(arg.ram());
  for (long j = 1; j <= deg; ++j) pw[j] = (pw[j - 1] * arg).truncated(order + v * pole);
  if (pole > 0) {
    TSeries inv = invert(arg, order + v * pole + 2 * v);
    pw[-1] = inv;
    for (long j = 2; j <= pole; ++j) pw[-j] = (pw[-j + 1] * inv).truncated(order + v * pole);
  }
  TSeries acc = TSeries::zero_to(order, f.ram());
  long e_hi = std::min<long>(f.support_end(), order + v * pole);
  for (long e = f.val(); e < e_hi; ++e) {
    const BiLaurent& c = f.coeff_s(e);
    if (c.zero()) continue;
    // Group the coefficient by the substituted exponent.
    std::map<long, BiLaurent> by_exp;
    for (const auto& [k, q] : c.terms()) {
      long je = on_y ? k.second : k.first;
      BiLaurent rest = on_y ? BiLaurent::mono(k.first, 0, q) : BiLaurent::mono(0, k.second, q);
      by_exp[je] += rest;
    }
    for (const auto& [je, rest] : by_exp) {
      TSeries term = pw.at(je).mul_coeff(rest).shifted_s(e);
      acc = acc + term.truncated(order);
    }
  }
  return acc.truncated(order);
}

}  // namespace

TSeries subst_y(const TSeries& f, const TSeries& arg, long order) {
  return subst_one_var(f, arg, order, true);
}

TSeries subst_x(const TSeries& f, const TSeries& arg, long order) {
  return subst_one_var(f, arg, order, false);
}

// --- named series ----------------------------------------------------------

namespace {
TSeries ts_rat(long num, long den = 1) { return TSeries::constant(rat(num, den)); }
TSeries ts_t(long k, long c = 1) { return TSeries::t_mono(k, rat(c)); }
}  // namespace

TSeries series_V(long order) {
  // Y = t(2 + Y^3)  <=>  -2t + Y - t*Y^3 = 0
  SeriesPoly p = {ts_t(1, -2), ts_rat(1), TSeries::zero(), ts_t(1, -1)};
  return newton_solve(p, TSeries::zero(), order);
}

TSeries series_W(long order) {
  TSeries v = series_V(order + 10);
  TSeries v3 = (v * v * v).truncated(order + 8);
  SeriesPoly p = {-v3, ts_rat(4), ts_rat(-4)};
  return newton_solve(p, TSeries::zero(), order);
}

TSeries series_Z(long order) {
  TSeries w = series_W(order + 8);
  SeriesPoly p = {-w, ts_rat(2), -w};
  return newton_solve(p, TSeries::zero(), order);
}

TSeries series_M(long order) {
  // Y = t(1 + 2Y + 4Y^2)
  SeriesPoly p = {ts_t(1, -1), ts_rat(1) - ts_t(1, 2), ts_t(1, -4)};
  return newton_solve(p, TSeries::zero(), order);
}

TSeries series_N(long order) {
  // Y(1-Y)^2 = t(Y^4 - 2Y^3 + 6Y^2 - 2Y + 1)
  SeriesPoly p = {ts_t(1, -1), ts_rat(1) + ts_t(1, 2), ts_rat(-2) - ts_t(1, 6),
                  ts_rat(1) + ts_t(1, 2), ts_t(1, -1)};
  return newton_solve(p, TSeries::zero(), order);
}

namespace {
TSeries cube(const TSeries& a) { return a * a * a; }
}  // namespace

TSeries series_P1(long order) {
  TSeries m = series_M(order + 10);
  TSeries a = cube(ts_rat(1) + rat(4) * m).truncated(order + 8);   // (1+4M)^3
  TSeries b = (m * cube(ts_rat(1) + m)).truncated(order + 8);      // M(1+M)^3
  // Y(1-Y)^2 a - b(1+Y)^4 = 0
  SeriesPoly p = {-b,          a - rat(4) * b, rat(-2) * a - rat(6) * b,
                  a - rat(4) * b, -b};
  return newton_solve(p, TSeries::zero(), order);
}

TSeries series_P2(long order) {
  TSeries m = series_M(order + 10);
  TSeries a = cube(ts_rat(1) + rat(4) * m).truncated(order + 8);
  TSeries b = (rat(4) * m * cube(ts_rat(1) + m) * a).truncated(order + 8);
  SeriesPoly p = {b, TSeries::zero(), -a, TSeries::zero(), ts_rat(1)};
  return newton_solve(p, ts_rat(1), order);
}

TSeries series_A1dk(long order) {
  TSeries n = series_N(order + 10);
  TSeries one = ts_rat(1);
  TSeries om = (one - n).truncated(order + 8);     // 1-N
  TSeries op = (one + n).truncated(order + 8);     // 1+N
  TSeries q = (n * n - n + one).truncated(order + 8);  // N^2-N+1
  auto powt = [&](const TSeries& f, int k) {
    TSeries r = one;
    for (int i = 0; i < k; ++i) r = (r * f).truncated(order + 8);
    return r;
  };
  SeriesPoly p = {
      rat(256) * powt(q, 6),
      rat(-64) * (powt(om, 3) * powt(op, 3) * powt(q, 3)).truncated(order + 8),
      rat(32) * (n * powt(q, 3) * powt(om, 4)).truncated(order + 8),
      rat(4) * (n * powt(op, 3) * powt(om, 7)).truncated(order + 8),
      (n * n * powt(om, 8)).truncated(order + 8),
  };
  return newton_solve(p, ts_rat(4), order);
}

// --- discriminant roots -----------------------------------------------------

namespace {

// Convert a series whose coefficients are Laurent in y only (no x) into a
// polynomial in the unknown y after clearing y poles. Exponents of s are
// preserved, so ramified inputs stay on their grid.
SeriesPoly poly_in_y(const TSeries& f) {
  long pole = f.max_pole_y();
  long deg = 0;
  for (long e = f.val(); e < f.support_end(); ++e) {
    const BiLaurent& c = f.coeff_s(e);
    if (c.zero()) continue;
    if (c.max_x() != 0 || c.min_x() != 0) throw SolveError("coefficient depends on x");
    deg = std::max(deg, c.max_y());
  }
  SeriesPoly p(static_cast<std::size_t>(deg + pole + 1), TSeries::zero());
  for (long k = 0; k <= deg + pole; ++k) {
    TSeries acc = TSeries::t_mono(0, BiLaurent(), f.ram());
    for (long e = f.val(); e < f.support_end(); ++e) {
      Rational q = f.coeff_s(e).coeff(0, k - pole);
      if (sgn(q) != 0) acc += TSeries::t_mono(0, BiLaurent::constant(q), f.ram()).shifted_s(e);
    }
    if (!f.exact()) acc = acc.truncated(f.order());
    p[k] = acc;
  }
  return p;
}

}  // namespace

std::vector<TSeries> delta_roots(const StepSet& model, long order_t) {
  StepSet comp = companion(model);
  TSeries delta = discriminant_y(comp);
  std::string name = model.name();
  if (name.empty()) {
    for (const auto& n : StepSet::catalog())
      if (StepSet::named(n).steps() == model.steps()) { name = n; break; }
  }
  if (name == "kreweras" || name == "m6" || name == "simple") {
    return {newton_solve(poly_in_y(delta), TSeries::zero(), order_t)};
  }
  if (name == "diagonal") {
    // The discriminant factors as (1 - t*ybar*(1+y)^2)(1 - t*ybar*(1-y)^2);
    // each factor has a unique power-series root.
    TSeries f0 = TSeries::poly({{0, BiLaurent::y()},
                                {1, -(BiLaurent::constant(1) + BiLaurent::y()) *
                                        (BiLaurent::constant(1) + BiLaurent::y())}});
    TSeries f1 = TSeries::poly({{0, BiLaurent::y()},
                                {1, -(BiLaurent::constant(1) - BiLaurent::y()) *
                                        (BiLaurent::constant(1) - BiLaurent::y())}});
    TSeries prod = f0 * f1;
    TSeries cleared = delta.mul_coeff(BiLaurent::mono(0, 2));
    if (!residual(prod, cleared).known_zero())
      throw SolveError("diagonal discriminant does not factor as expected");
    return {newton_solve(poly_in_y(f0), TSeries::zero(), order_t),
            newton_solve(poly_in_y(f1), TSeries::zero(), order_t)};
  }
  if (name == "reverse-kreweras" || name == "double-kreweras") {
    // Two conjugate Puiseux branches with ramification 2.
    SeriesPoly p;
    {
      TSeries lifted = delta.lifted(2);
      p = poly_in_y(lifted);
    }
    auto seed = [](long e_lead, long e_next, long c_next) {
      TSeries s = TSeries::t_mono(0, BiLaurent::constant(1), 2).shifted_s(e_lead);
      s += TSeries::t_mono(0, BiLaurent::constant(rat(c_next)), 2).shifted_s(e_next);
      return s;  // exact polynomial prefix
    };
    TSeries seed_hi, seed_lo;
    if (name == "reverse-kreweras") {
      seed_hi = seed(2, 5, 2);
      seed_lo = seed(2, 5, -2);
    } else {
      seed_hi = seed(2, 3, 2);
      seed_lo = seed(2, 3, -2);
    }
    long order_s = 2 * order_t;
    return {newton_solve(p, seed_hi, order_s), newton_solve(p, seed_lo, order_s)};
  }
  throw SolveError("no discriminant-root catalog entry for this model");
}

TSeries kernel_root(const StepSet& m, long order_t) {
  Splits s = splits(m);
  if (s.vminus.zero() || s.vplus.zero())
    throw SolveError("kernel does not have x-valuation -1 and x-degree 1");
  SeriesPoly p = {TSeries::t_mono(1, -s.vminus), TSeries::constant(1) - TSeries::t_mono(1, s.v0),
                  TSeries::t_mono(1, -s.vplus)};
  TSeries root = newton_solve(p, TSeries::zero(), order_t);
  return root;
}

}  // namespace walks
