#include "walks/harmonics.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace walks {

// --- FSeries -----------------------------------------------------------------

FSeries FSeries::constant(const Real& a, long len) {
  std::vector<Real> c(static_cast<std::size_t>(len));
  c[0] = a;
  return FSeries(std::move(c));
}

FSeries FSeries::variable(long len) {
  std::vector<Real> c(static_cast<std::size_t>(len));
  if (len > 1) c[1] = Real(1);
  return FSeries(std::move(c));
}

const Real& FSeries::at(long k) const {
  static const Real zero;
  long idx = k - val_;
  if (idx < 0) return zero;
  if (idx >= size()) throw SeriesError("FSeries coefficient beyond truncation");
  return c_[idx];
}

FSeries operator+(const FSeries& a, const FSeries& b) {
  long val = std::min(a.val_, b.val_);
  long hi = std::min(a.val_ + a.size(), b.val_ + b.size());
  std::vector<Real> c(static_cast<std::size_t>(hi - val));
  for (long k = val; k < hi; ++k) {
    Real s;
    if (k >= a.val_ && k - a.val_ < a.size()) s += a.c_[k - a.val_];
    if (k >= b.val_ && k - b.val_ < b.size()) s += b.c_[k - b.val_];
    c[k - val] = s;
  }
  return FSeries(std::move(c), val);
}

FSeries FSeries::operator-() const {
  FSeries r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

FSeries operator-(const FSeries& a, const FSeries& b) { return a + (-b); }

FSeries operator*(const FSeries& a, const FSeries& b) {
  long len = std::min(a.size(), b.size());
  std::vector<Real> c(static_cast<std::size_t>(len));
  for (long i = 0; i < len; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (long j = 0; i + j < len; ++j) {
      if (b.c_[j].is_zero()) continue;
      c[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return FSeries(std::move(c), a.val_ + b.val_);
}

FSeries FSeries::scaled(const Real& a) const {
  FSeries r = *this;
  for (auto& x : r.c_) x *= a;
  return r;
}

FSeries FSeries::shifted(long k) const {
  FSeries r = *this;
  r.val_ += k;
  return r;
}

FSeries FSeries::inv() const {
  if (c_.empty() || c_[0].is_zero()) throw SeriesError("FSeries inverse of zero leading term");
  std::vector<Real> r(c_.size());
  Real lead = Real(1) / c_[0];
  r[0] = lead;
  for (long m = 1; m < size(); ++m) {
    Real acc;
    for (long k = 1; k <= m; ++k) acc += c_[k] * r[m - k];
    r[m] = -(acc * lead);
  }
  return FSeries(std::move(r), -val_);
}

FSeries FSeries::sqrt_() const {
  if (val_ % 2 != 0) throw SeriesError("FSeries sqrt with odd valuation");
  if (c_.empty() || !(c_[0] > Real(0))) throw SeriesError("FSeries sqrt needs positive lead");
  std::vector<Real> r(c_.size());
  r[0] = sqrt(c_[0]);
  Real half_inv = Real(1) / (Real(2) * r[0]);
  for (long m = 1; m < size(); ++m) {
    Real acc = c_[m];
    for (long k = 1; k < m; ++k) acc -= r[k] * r[m - k];
    r[m] = acc * half_inv;
  }
  return FSeries(std::move(r), val_ / 2);
}

FSeries FSeries::truncated(long len) const {
  FSeries r = *this;
  if (len < size()) r.c_.resize(static_cast<std::size_t>(len));
  return r;
}

FSeries FSeries::drop_low(long k, const Real& tol) const {
  if (val_ != 0) throw SeriesError("drop_low expects valuation 0");
  for (long i = 0; i < k && i < size(); ++i)
    if (abs(c_[i]) > tol) throw SeriesError("drop_low: low coefficient not negligible");
  std::vector<Real> c(c_.begin() + std::min<long>(k, size()), c_.end());
  return FSeries(std::move(c), 0);
}

// --- boundary closed forms -----------------------------------------------------

namespace {

FSeries fs_poly(std::vector<double> coeffs, long len) {
  std::vector<Real> c(static_cast<std::size_t>(len));
  for (std::size_t k = 0; k < coeffs.size() && k < c.size(); ++k) c[k] = Real(coeffs[k]);
  return FSeries(std::move(c));
}

FSeries fs_lin(const Real& a0, const Real& a1, long len) {
  std::vector<Real> c(static_cast<std::size_t>(len));
  c[0] = a0;
  if (len > 1) c[1] = a1;
  return FSeries(std::move(c));
}

// Newton solve F(u; x) = 0 for a series u(x) with constant term u0,
// given F and F' as callbacks on FSeries.
FSeries fseries_newton(const std::function<FSeries(const FSeries&)>& f,
                       const std::function<FSeries(const FSeries&)>& fprime, const Real& u0,
                       long len) {
  FSeries u = FSeries::constant(u0, len);
  for (long it = 0, goal = 1; goal < 2 * len; ++it, goal *= 2) {
    FSeries corr = f(u) * fprime(u).inv();
    u = (u - corr).truncated(len);
    if (it > 40) throw SeriesError("series Newton did not converge");
  }
  return u;
}

// L(x) = sqrt(3) + O(x) with x (2L-3)(L^2-12L+9) + 9L^2 - 27 = 0.
FSeries gessel_L(long len) {
  Real s3 = sqrt(Real(3));
  FSeries x = FSeries::variable(len);
  auto F = [&](const FSeries& l) {
    FSeries l2 = l * l;
    return x * (l.scaled(Real(2)) - FSeries::constant(Real(3), len)) *
               (l2 - l.scaled(Real(12)) + FSeries::constant(Real(9), len)) +
           l2.scaled(Real(9)) - FSeries::constant(Real(27), len);
  };
  auto Fp = [&](const FSeries& l) {
    FSeries l2 = l * l;
    FSeries inner = (l2 - l.scaled(Real(12)) + FSeries::constant(Real(9), len)).scaled(Real(2)) +
                    (l.scaled(Real(2)) - FSeries::constant(Real(3), len)) *
                        (l.scaled(Real(2)) - FSeries::constant(Real(12), len));
    return x * inner + l.scaled(Real(18));
  };
  return fseries_newton(F, Fp, s3, len);
}

// P(y) = 1/3 + O(y) with y P^2 (P-3) + 3P - 1 = 0.
FSeries gessel_P(long len) {
  FSeries y = FSeries::variable(len);
  auto F = [&](const FSeries& p) {
    return y * p * p * (p - FSeries::constant(Real(3), len)) + p.scaled(Real(3)) -
           FSeries::constant(Real(1), len);
  };
  auto Fp = [&](const FSeries& p) {
    return y * (p * p.scaled(Real(3)) - p.scaled(Real(6))) + FSeries::constant(Real(3), len);
  };
  return fseries_newton(F, Fp, Real(1) / Real(3), len);
}

}  // namespace

HarmonicBoundary harmonic_boundary(const StepSet& model, long terms) {
  long len = terms + 4;
  HarmonicBoundary out;
  Real tol = pow(Real(10), Real(-(Real::working_digits() * 3) / 4));
  std::string name = model.name();
  FSeries x = FSeries::variable(len);
  FSeries one = FSeries::constant(Real(1), len);

  if (name == "kreweras") {
    FSeries inv1mx = (one - x).inv();
    FSeries g = fs_lin(Real(1), Real(2), len) * inv1mx *
                ((fs_lin(Real(4), Real(-1), len) * inv1mx).sqrt_());
    FSeries hm = (g + FSeries::constant(Real(2), len)).sqrt_().scaled(Real(9) / Real(2)).shifted(1);
    FSeries hd = (g - FSeries::constant(Real(2), len)).drop_low(1, tol).sqrt_() *
                 inv1mx * (fs_lin(Real(4), Real(-1), len).inv().sqrt_()).scaled(Real(9));
    for (long k = 0; k < terms; ++k) out.hminus.push_back(hm.at(k));
    for (long k = 0; k < terms; ++k) out.hdiag.push_back(hd.at(k));
  } else if (name == "reverse-kreweras") {
    Real s3 = sqrt(Real(3));
    FSeries inv1mx = (one - x).inv();
    FSeries pm32 = inv1mx * inv1mx.sqrt_();  // (1-x)^(-3/2)
    FSeries arg = one + (x * pm32).scaled(s3 * Real(3) / Real(2));
    FSeries hm = (arg.sqrt_() - one).scaled(Real(27) * s3 / Real(8));
    FSeries argd = one - (x * pm32).scaled(s3 * Real(3) / Real(2));
    FSeries hd = argd.sqrt_() * inv1mx * fs_lin(Real(1), Real(-4), len).inv().sqrt_();
    hd = hd.scaled(Real(27) * s3 / Real(4));
    for (long k = 0; k < terms; ++k) out.hminus.push_back(hm.at(k));
    for (long k = 0; k < terms; ++k) out.hdiag.push_back(hd.at(k));
  } else if (name == "double-kreweras") {
    Real s2 = sqrt(Real(2)), s3 = sqrt(Real(3));
    Real c34 = pow(Real(3), Real(7) / Real(4));
    FSeries inv1mx = (one - x).inv();
    FSeries r = (fs_lin(Real(2) - s3, Real(1), len) * inv1mx) *
                ((fs_lin(Real(7) + Real(4) * s3, Real(-1), len) * inv1mx).sqrt_());
    FSeries inv1px = (one + x).inv();
    FSeries hm = (FSeries::constant(s2, len) + r).sqrt_() -
                 FSeries::constant(sqrt(s2 - Real(1)), len);
    hm = hm * inv1px * x;
    hm = hm.scaled(c34 * sqrt(s2 - Real(1)) / s2);
    FSeries quad = fs_poly({1, -14, 1}, len);
    FSeries hd = (FSeries::constant(s2, len) - r).sqrt_() * inv1mx * quad.inv().sqrt_();
    hd = hd.scaled(c34 * s2 * sqrt(s2 - Real(1)));
    for (long k = 0; k < terms; ++k) out.hminus.push_back(hm.at(k));
    for (long k = 0; k < terms; ++k) out.hdiag.push_back(hd.at(k));
  } else if (name == "simple") {
    Real s3 = sqrt(Real(3));
    FSeries l = gessel_L(len);
    FSeries lm3 = l - FSeries::constant(Real(3), len);
    FSeries hm = x * (l.scaled(Real(2)) - FSeries::constant(Real(3), len)) * (lm3 * lm3).inv();
    hm = hm.scaled(Real(128) * s3 / Real(9));
    FSeries p = gessel_P(len);
    FSeries pm3 = p - FSeries::constant(Real(3), len);
    FSeries omp = FSeries::constant(Real(1), len) - p;
    FSeries hd = (p + one) * pm3 * pm3 * p * p * p *
                 (omp * omp * omp * omp * omp).inv();
    hd = hd.scaled(Real(64) * s3 / Real(27));
    for (long k = 0; k < terms; ++k) out.hminus.push_back(hm.at(k));
    for (long k = 0; k < terms; ++k) out.hdiag.push_back(hd.at(k));
  } else if (name == "diagonal") {
    Real s3 = sqrt(Real(3));
    out.axis_stride = 2;
    FSeries p = gessel_P(len);
    FSeries hm = (p.scaled(Real(3)) - one) *
                 ((p + one) * (p - one) * (p - one)).inv();
    hm = hm.scaled(Real(32) * s3 / Real(9));
    FSeries l = gessel_L(len);
    FSeries l2 = l * l;
    FSeries num = l * (l2 - FSeries::constant(Real(3), len)) *
                  (l2 - FSeries::constant(Real(3), len));
    FSeries den = (l2 + l.scaled(Real(6)) - FSeries::constant(Real(9), len)) *
                  (FSeries::constant(Real(3), len) - l) *
                  (FSeries::constant(Real(3), len) - l) *
                  (FSeries::constant(Real(3), len) - l) *
                  (FSeries::constant(Real(3), len) - l) *
                  (FSeries::constant(Real(3), len) - l);
    FSeries hd = (num * den.inv()).drop_low(2, tol).scaled(Real(144) * s3);
    for (long k = 0; k < terms; ++k) out.hminus.push_back(hm.at(k));
    for (long k = 0; k < terms; ++k) out.hdiag.push_back(hd.at(k));
  } else {
    throw ModelError("no harmonic closed form for model '" + name + "'");
  }
  return out;
}

std::vector<Real> quadrant_harmonic_x(const StepSet& model, long terms) {
  long len = terms + 4;
  std::string name = model.name();
  FSeries x = FSeries::variable(len);
  FSeries one = FSeries::constant(Real(1), len);
  FSeries out_series;
  if (name == "kreweras") {
    FSeries inv1mx = (one - x).inv();
    FSeries g = fs_lin(Real(1), Real(2), len) * inv1mx *
                ((fs_lin(Real(4), Real(-1), len) * inv1mx).sqrt_());
    out_series = (g + FSeries::constant(Real(2), len)).scaled(Real(9) / Real(4));
  } else if (name == "reverse-kreweras") {
    FSeries inv1mx = (one - x).inv();
    out_series = (inv1mx * inv1mx.sqrt_()).scaled(Real(9));
  } else if (name == "double-kreweras") {
    Real s3 = sqrt(Real(3));
    FSeries inv1mx = (one - x).inv();
    FSeries r = (fs_lin(Real(2) - s3, Real(1), len) * inv1mx) *
                ((fs_lin(Real(7) + Real(4) * s3, Real(-1), len) * inv1mx).sqrt_());
    out_series = ((r + one) * (one + x).inv()).scaled(Real(3) / Real(2));
  } else if (name == "simple") {
    Real s3 = sqrt(Real(3));
    FSeries l = gessel_L(len);
    FSeries lm3 = l - FSeries::constant(Real(3), len);
    FSeries lm3_4 = lm3 * lm3 * lm3 * lm3;
    FSeries t = l.scaled(Real(2)) - FSeries::constant(Real(3), len);
    out_series = (t * t * lm3_4.inv()).scaled(Real(48) * s3);
  } else {
    throw ModelError("no quadrant harmonic closed form for model '" + name + "'");
  }
  std::vector<Real> out;
  for (long k = 0; k < terms; ++k) out.push_back(out_series.at(k));
  return out;
}

// --- grids ---------------------------------------------------------------------

namespace {

struct GridFill {
  long imax;
  long base;  // leftmost column of row 0 is -base
  std::map<std::pair<long, long>, Real> store;

  bool in_cone(long i, long j) const { return i >= 0 || j >= 0; }
  bool stored(long i, long j) const { return store.count({i, j}) > 0; }

  // Value with mirror symmetry and cone support; throws on a gap.
  Real val(long i, long j) const {
    if (!in_cone(i, j)) return Real(0);
    if (i > j) std::swap(i, j);
    auto it = store.find({i, j});
    if (it == store.end()) throw SeriesError("harmonic grid fill order violated");
    return it->second;
  }
  bool have(long i, long j) const {
    if (!in_cone(i, j)) return true;
    if (i > j) std::swap(i, j);
    return stored(i, j);
  }
};

}  // namespace

HarmonicGrid harmonic_grid(const StepSet& model, long imax, long precision) {
  long saved = Real::working_digits();
  Real::set_working_digits(precision);
  HarmonicGrid g;
  g.model = model;
  g.imax = imax;
  g.precision = precision;
  g.mu = Real(static_cast<long>(model.size()));
  std::string name = model.name();
  bool cubic_like = name == "kreweras" || name == "reverse-kreweras" || name == "double-kreweras";
  g.alpha = cubic_like ? Real(3) / Real(4) : Real(2) / Real(3);

  GridFill f;
  f.imax = imax;
  // Rows shrink from the left by two columns each (the widest lateral reach
  // of any lookup), so the base row must be wide enough for imax+1 rows.
  f.base = 3 * imax + 8;
  long stride = name == "diagonal" ? 2 : 1;
  HarmonicBoundary hb = harmonic_boundary(model, f.base / stride + imax + 6);

  // Row 0 and the diagonal from the closed forms.
  for (long i = -f.base; i <= 0; ++i) {
    if (i == 0) continue;
    Real v;
    if ((-i) % stride == 0) v = hb.hminus[(-i) / stride];
    f.store[{i, 0}] = v;
  }
  for (long d = 0; d <= imax + 1; ++d) f.store[{d, d}] = hb.hdiag[d];

  // Per-model solver step: the target of a relation anchored at row j is
  // target = p - sstar with sstar the unique step of maximal downward reach.
  Step sstar{0, -1};
  if (name == "reverse-kreweras") sstar = {-1, -1};
  if (name == "diagonal") sstar = {1, -1};
  long msize = static_cast<long>(model.size());

  for (long j = 0; j < imax + 1; ++j) {
    // Fill row j+1, right to left; the diagonal entry is already present.
    for (long i = j; i >= -f.base + 2 * (j + 1); --i) {
      long ti = i, tj = j + 1;
      if (stride == 2 && ((ti + tj) % 2 != 0)) {
        f.store[{ti, tj}] = Real(0);
        continue;
      }
      long pi = ti + sstar.first, pj = tj + sstar.second;
      Real acc = Real(msize) * f.val(pi, pj);
      long denom = 1;
      for (const auto& s : model.steps()) {
        if (s == sstar) continue;
        long qi = pi - s.first, qj = pj - s.second;
        long mi = qi, mj = qj;
        if (mi > mj) std::swap(mi, mj);
        if (f.in_cone(qi, qj) && mi == ti && mj == tj) {
          ++denom;
          continue;
        }
        acc -= f.val(qi, qj);
      }
      f.store[{ti, tj}] = acc / Real(denom);
    }
  }

  // Collect the requested window (both wedges via symmetry).
  for (long i = -imax; i <= imax; ++i)
    for (long j = -imax; j <= imax; ++j) {
      if (!f.in_cone(i, j)) continue;
      long mi = i, mj = j;
      if (mi > mj) std::swap(mi, mj);
      if (!f.stored(mi, mj)) continue;
      Real v = f.val(i, j);
      g.values[{i, j}] = v;
      bool structural_zero = stride == 2 && (i + j) % 2 != 0;
      if (structural_zero ? !v.is_zero() : !(v > Real(0))) g.positive = false;
    }

  // Harmonic-relation residual wherever every neighbor is available.
  Real maxres;
  for (const auto& [pt, v] : g.values) {
    bool ok = true;
    Real acc;
    for (const auto& s : model.steps()) {
      long qi = pt.first - s.first, qj = pt.second - s.second;
      if (!f.in_cone(qi, qj)) continue;
      long mi = qi, mj = qj;
      if (mi > mj) std::swap(mi, mj);
      if (!f.stored(mi, mj)) {
        ok = false;
        break;
      }
      acc += f.val(qi, qj);
    }
    if (!ok) continue;
    Real res = abs(v - acc / Real(msize));
    if (res > maxres) maxres = res;
  }
  g.max_residual = maxres;
  Real::set_working_digits(saved);
  return g;
}

std::string grid_json(const HarmonicGrid& g) {
  nlohmann::json j;
  j["model"] = g.model.name();
  j["imax"] = g.imax;
  j["precision"] = g.precision;
  j["mu"] = g.mu.str(20);
  j["alpha"] = g.alpha.str(20);
  j["max_residual"] = g.max_residual.str(8);
  j["positive"] = g.positive;
  nlohmann::json vals = nlohmann::json::array();
  for (const auto& [pt, v] : g.values)
    vals.push_back({{"i", pt.first}, {"j", pt.second}, {"h", v.str()}});
  j["values"] = vals;
  return j.dump();
}

// --- asymptotics -----------------------------------------------------------------

Real estimate_limit(const std::vector<std::pair<long, Real>>& samples, const Real& beta) {
  if (samples.size() < 8) throw SeriesError("too few points for extrapolation");
  std::size_t lo = samples.size() - samples.size() / 3;
  Real sz, szz, su, szu, count;
  for (std::size_t k = lo; k < samples.size(); ++k) {
    Real z = pow(Real(samples[k].first), -beta);
    Real u = samples[k].second;
    sz += z;
    szz += z * z;
    su += u;
    szu += z * u;
    count += Real(1);
  }
  Real det = count * szz - sz * sz;
  return (su * szz - sz * szu) / det;
}

namespace {

Real gamma_abs(const Real& x) { return abs(gamma_fn(x)); }

struct Target {
  StepSet model;
  Region region;
  std::pair<long, long> cell;  // endpoint, or {-1000,-1000} for totals
  long period;
  long offset;
  Real mu;
  Real exponent;  // u(n) = c(n) mu^-n n^exponent
  Real constant;
};

Target make_target(const std::string& which, long precision) {
  Real::set_working_digits(precision);
  Target t;
  t.region = Region::kThreeQuadrant;
  t.cell = {-1000, -1000};
  Real s2 = sqrt(Real(2)), s3 = sqrt(Real(3));
  if (which == "kreweras-c00") {
    t.model = StepSet::named("kreweras");
    t.cell = {0, 0};
    t.period = 3;
    t.offset = 0;
    t.mu = Real(3);
    t.exponent = Real(7) / Real(4);
    t.constant = Real(27) * s3 / (Real(4) * gamma_abs(Real(-3) / Real(4)));
  } else if (which == "kreweras-total") {
    t.model = StepSet::named("kreweras");
    t.period = 1;
    t.offset = 0;
    t.mu = Real(3);
    t.exponent = Real(3) / Real(8);
    t.constant = pow(Real(3), Real(3) / Real(4)) * sqrt(Real(2) - s2) /
                 gamma_fn(Real(5) / Real(8));
  } else if (which == "reverse-kreweras-total") {
    t.model = StepSet::named("reverse-kreweras");
    t.period = 1;
    t.offset = 0;
    t.mu = Real(3);
    t.exponent = Real(3) / Real(8);
    t.constant = Real(9) / Real(4) *
                 pow(Real(9) / Real(2) - Real(3) * s2, Real(1) / Real(4)) /
                 gamma_fn(Real(5) / Real(8));
  } else if (which == "double-kreweras-total") {
    t.model = StepSet::named("double-kreweras");
    t.period = 1;
    t.offset = 0;
    t.mu = Real(6);
    t.exponent = Real(3) / Real(8);
    t.constant = pow(Real(2), Real(1) / Real(4)) * pow(Real(3), Real(9) / Real(8)) *
                 (s2 - Real(1)) / gamma_fn(Real(5) / Real(8));
  } else if (which == "simple-c00" || which == "diagonal-c00") {
    t.model = StepSet::named(which == "simple-c00" ? "simple" : "diagonal");
    t.cell = {0, 0};
    t.period = 2;
    t.offset = 0;
    t.mu = Real(4);
    t.exponent = Real(5) / Real(3);
    HarmonicBoundary hb = harmonic_boundary(t.model, 4);
    t.constant = hb.hdiag[0] / gamma_abs(Real(-2) / Real(3));
  } else {
    throw ModelError("unknown asymptotics target '" + which + "'");
  }
  return t;
}

}  // namespace

const std::vector<std::string>& asymptotics_targets() {
  static const std::vector<std::string> v = {"kreweras-c00",       "kreweras-total",
                                             "reverse-kreweras-total", "double-kreweras-total",
                                             "simple-c00",         "diagonal-c00"};
  return v;
}

std::string asymptotics_target_name(const std::string& model, const std::string& cell) {
  std::string key = model + (cell == "total" || cell.empty() ? "-total" : "-c00");
  if (!cell.empty() && cell != "total" && cell != "0,0")
    throw ModelError("no closed-form growth constant for endpoint " + cell +
                     "; supported: 0,0 or total");
  for (const auto& t : asymptotics_targets())
    if (t == key) return t;
  throw ModelError("no growth-constant target for model '" + model + "' with endpoint '" +
                   cell + "'; see asymptotics --list");
}

AsymptoticsReport asymptotics(const std::string& which, long nmax, long precision) {
  long saved = Real::working_digits();
  Real::set_working_digits(precision);
  Target t = make_target(which, precision);
  bool totals = t.cell.first == -1000;
  std::vector<std::pair<long, long>> cells;
  if (!totals) cells.push_back(t.cell);
  StreamCounts sc = count_walks_stream(t.model, t.region, {WeightedStart{}}, nmax, cells);
  std::vector<std::pair<long, Real>> samples;
  for (long n = (t.period == 1 ? 1 : t.period); n <= nmax; ++n) {
    if ((n - t.offset) % t.period != 0) continue;
    const Int& c = totals ? sc.totals[n] : sc.cells.at(t.cell)[n];
    if (c == 0) continue;
    Real u = Real(c) * pow(t.mu, Real(-n)) * pow(Real(n), t.exponent);
    samples.push_back({n, u});
  }
  AsymptoticsReport r;
  r.model = t.model.name();
  r.target = which;
  r.estimate = estimate_limit(samples, Real(1) / Real(4));
  r.paper_constant = t.constant;
  r.rel_err = abs(r.estimate - t.constant) / abs(t.constant);
  Real::set_working_digits(saved);
  return r;
}

std::string asymptotics_json(const AsymptoticsReport& r) {
  nlohmann::json j;
  j["model"] = r.model;
  j["target"] = r.target;
  j["estimate"] = r.estimate.str(20);
  j["paper_constant"] = r.paper_constant.str(20);
  j["rel_err"] = r.rel_err.str(6);
  return j.dump();
}

DaPredictions da_predictions(long nmax, long precision) {
  long saved = Real::working_digits();
  Real::set_working_digits(precision);
  DaPredictions out;

  // mu: the positive root of u^3 + u^2 - 18u - 43.
  auto cubic = [](const Real& u) { return ((u + Real(1)) * u - Real(18)) * u - Real(43); };
  auto cubic_d = [](const Real& u) { return (Real(3) * u + Real(2)) * u - Real(18); };
  Real mu(4.7);
  for (int k = 0; k < 200; ++k) mu = mu - cubic(mu) / cubic_d(mu);
  out.mu = mu;
  out.mu_residual = abs(cubic(mu));

  // c: root of 64c^6 - 64c^4 + 28c^2 - 5 near 0.626; alpha = pi/arccos(-c).
  auto sext = [](const Real& c) {
    Real c2 = c * c;
    return ((Real(64) * c2 - Real(64)) * c2 + Real(28)) * c2 - Real(5);
  };
  auto sext_d = [](const Real& c) {
    Real c2 = c * c;
    return ((Real(384) * c2 - Real(256)) * c2 + Real(56)) * c;
  };
  Real c(0.62);
  for (int k = 0; k < 200; ++k) c = c - sext(c) / sext_d(c);
  out.alpha = Real::pi() / acos(-c);
  out.alpha_residual = abs(sext(c));

  // The two sequences, from exact counts.
  StepSet m6 = StepSet::named("m6");
  StepSet comp = companion(m6);
  StreamCounts cone = count_walks_stream(m6, Region::kThreeQuadrant, {WeightedStart{}}, nmax,
                                         {{0, 0}, {-1, 0}, {-2, 0}});
  StreamCounts quad = count_walks_stream(comp, Region::kQuadrant, {WeightedStart{}}, nmax,
                                         {{0, 0}, {0, 1}, {1, 0}});
  Real c00(cone.cells.at({0, 0})[nmax]);
  Real cm10(cone.cells.at({-1, 0})[nmax]);
  Real cm20(cone.cells.at({-2, 0})[nmax]);
  Real q00(quad.cells.at({0, 0})[nmax]);
  Real q01(quad.cells.at({0, 1})[nmax]);
  Real q10(quad.cells.at({1, 0})[nmax]);
  out.seq_walks = c00 / cm10;
  out.seq_quadrant = sqrt(Real(1) + q01 / q00);
  out.seq_gap = abs(out.seq_walks - out.seq_quadrant) / out.seq_quadrant;
  Real lhs_ratio = cm10 / cm20;
  Real rhs_ratio = Real(2) * q00 / q10;
  out.axis_ratio_gap = abs(lhs_ratio - rhs_ratio) / rhs_ratio;

  // Kreweras kappa = 3: the negative-axis series against 3x sqrt of the
  // quadrant section, coefficient by coefficient.
  long terms = 16;
  HarmonicBoundary hb = harmonic_boundary(StepSet::named("kreweras"), terms + 2);
  std::vector<Real> qh = quadrant_harmonic_x(StepSet::named("kreweras"), terms + 2);
  FSeries qs(std::vector<Real>(qh.begin(), qh.end()));
  FSeries rhs = qs.sqrt_().scaled(Real(3)).shifted(1);
  Real worst;
  for (long k = 1; k <= terms; ++k) {
    Real d = abs(hb.hminus[k] - rhs.at(k));
    if (d > worst) worst = d;
  }
  out.kappa_residual = worst;
  Real::set_working_digits(saved);
  return out;
}

std::string da_json(const DaPredictions& r) {
  nlohmann::json j;
  j["mu"] = r.mu.str(30);
  j["mu_residual"] = r.mu_residual.str(6);
  j["alpha"] = r.alpha.str(30);
  j["alpha_residual"] = r.alpha_residual.str(6);
  j["seq_walks"] = r.seq_walks.str(12);
  j["seq_quadrant"] = r.seq_quadrant.str(12);
  j["seq_gap"] = r.seq_gap.str(6);
  j["axis_ratio_gap"] = r.axis_ratio_gap.str(6);
  j["kappa_residual"] = r.kappa_residual.str(6);
  return j.dump();
}

}  // namespace walks
