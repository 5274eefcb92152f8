#include "walks/series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

namespace walks {

const BiLaurent TSeries::kZeroCoeff{};

void TSeries::normalize() {
  // Strip known-zero leading coefficients; val_ then names the true valuation
  // of the known window.
  while (!c_.empty() && c_.front().zero()) {
    c_.erase(c_.begin());
    ++val_;
  }
  if (exact()) {
    while (!c_.empty() && c_.back().zero()) c_.pop_back();
    if (c_.empty()) val_ = 0;
  } else {
    if (c_.empty()) val_ = order_;
    if (val_ > order_) val_ = order_;
  }
}

TSeries TSeries::zero_to(long order, int ram) {
  TSeries r;
  r.ram_ = ram;
  r.val_ = order;
  r.order_ = order;
  return r;
}

TSeries TSeries::t_mono(long k, const BiLaurent& c, int ram) {
  TSeries r;
  r.ram_ = ram;
  r.val_ = k * ram;
  r.order_ = kExact;
  if (!c.zero()) r.c_.push_back(c);
  if (r.c_.empty()) r.val_ = 0;
  return r;
}

TSeries TSeries::poly(const std::vector<std::pair<long, BiLaurent>>& terms, int ram) {
  TSeries r = zero();
  r.ram_ = ram;
  for (const auto& [k, c] : terms) r += t_mono(k, c, ram);
  return r;
}

TSeries TSeries::one_minus_t(const BiLaurent& s) {
  return poly({{0, BiLaurent::constant(1)}, {1, -s}});
}

bool TSeries::known_zero() const {
  for (const auto& p : c_)
    if (!p.zero()) return false;
  return true;
}

const BiLaurent& TSeries::coeff_s(long e) const {
  if (e < val_) return kZeroCoeff;
  if (exact()) {
    long idx = e - val_;
    if (idx >= static_cast<long>(c_.size())) return kZeroCoeff;
    return c_[idx];
  }
  if (e >= order_) throw SeriesError("insufficient truncation");
  long idx = e - val_;
  if (idx >= static_cast<long>(c_.size())) return kZeroCoeff;
  return c_[idx];
}

long TSeries::max_pole_x() const {
  long m = 0;
  for (const auto& p : c_) m = std::max(m, p.pole_x());
  return m;
}

long TSeries::max_pole_y() const {
  long m = 0;
  for (const auto& p : c_) m = std::max(m, p.pole_y());
  return m;
}

std::optional<CoeffLocus> TSeries::first_nonzero() const {
  for (long k = 0; k < static_cast<long>(c_.size()); ++k) {
    if (!c_[k].zero()) {
      const auto& t = *c_[k].terms().begin();
      return CoeffLocus{val_ + k, t.first.first, t.first.second};
    }
  }
  return std::nullopt;
}

TSeries TSeries::truncated(long order) const {
  if (order >= order_) return *this;
  TSeries r = *this;
  r.order_ = order;
  long win = std::max(0L, order - val_);
  if (static_cast<long>(r.c_.size()) > win) r.c_.resize(win);
  r.normalize();
  return r;
}

TSeries TSeries::lifted(int new_ram) const {
  if (new_ram == ram_) return *this;
  if (new_ram % ram_ != 0) throw SeriesError("ramification lift must refine the grid");
  long f = new_ram / ram_;
  TSeries r;
  r.ram_ = new_ram;
  r.val_ = val_ * f;
  r.order_ = exact() ? kExact : order_ * f;
  if (!c_.empty()) {
    r.c_.assign(static_cast<std::size_t>((c_.size() - 1) * f + 1), BiLaurent());
    for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k * f] = c_[k];
  }
  return r;
}

TSeries TSeries::restricted(int new_ram) const {
  if (new_ram == ram_) return *this;
  if (ram_ % new_ram != 0) throw SeriesError("ramification restrict must coarsen the grid");
  long f = ram_ / new_ram;
  TSeries r;
  r.ram_ = new_ram;
  // Round the window inward to exponents divisible by f.
  long v = val_;
  while (v % f != 0) {
    if (!coeff_s(v).zero()) throw SeriesError("series does not live on the coarser grid");
    ++v;
  }
  r.val_ = v / f;
  if (exact()) {
    r.order_ = kExact;
    for (long e = v; e < window_end(); ++e) {
      const BiLaurent& p = coeff_s(e);
      if (e % f == 0) {
        r.c_.push_back(p);
      } else if (!p.zero()) {
        throw SeriesError("series does not live on the coarser grid");
      }
    }
  } else {
    r.order_ = order_ / f;  // floor: last fully known coarse exponent bound
    for (long e = v; e < order_; ++e) {
      const BiLaurent& p = coeff_s(e);
      if (e % f == 0) {
        if (e / f < r.order_) r.c_.push_back(p);
      } else if (!p.zero()) {
        throw SeriesError("series does not live on the coarser grid");
      }
    }
  }
  r.normalize();
  return r;
}

TSeries TSeries::shifted_s(long e) const {
  TSeries r = *this;
  r.val_ += e;
  if (!r.exact()) r.order_ += e;
  return r;
}

TSeries TSeries::map_coeffs(const std::function<BiLaurent(const BiLaurent&)>& f) const {
  TSeries r = *this;
  for (auto& p : r.c_) p = f(p);
  r.normalize();
  return r;
}

TSeries TSeries::mul_coeff(const BiLaurent& p) const {
  if (p.zero()) return exact() ? zero() : zero_to(order_ + val_, ram_);
  return map_coeffs([&](const BiLaurent& q) { return q * p; });
}

TSeries TSeries::mul_rat(const Rational& q) const {
  if (sgn(q) == 0) return exact() ? zero() : zero_to(order_ + val_, ram_);
  return map_coeffs([&](const BiLaurent& p) { return p * q; });
}

void TSeries::align(const TSeries& a, const TSeries& b, TSeries& a2, TSeries& b2) {
  int r = std::lcm(a.ram_, b.ram_);
  a2 = a.lifted(r);
  b2 = b.lifted(r);
}

TSeries operator+(const TSeries& a0, const TSeries& b0) {
  TSeries a, b;
  TSeries::align(a0, b0, a, b);
  TSeries r;
  r.ram_ = a.ram_;
  r.order_ = std::min(a.order_, b.order_);
  r.val_ = std::min(a.val_, b.val_);
  long hi = std::min(r.order_, std::max(a.window_end(), b.window_end()));
  if (r.order_ == TSeries::kExact) hi = std::max(a.window_end(), b.window_end());
  if (hi < r.val_) hi = r.val_;
  r.c_.assign(static_cast<std::size_t>(hi - r.val_), BiLaurent());
  for (long e = r.val_; e < hi; ++e) {
    BiLaurent s;
    if (e >= a.val_ && e < a.window_end()) s += a.c_[e - a.val_];
    if (e >= b.val_ && e < b.window_end()) s += b.c_[e - b.val_];
    r.c_[e - r.val_] = std::move(s);
  }
  r.normalize();
  return r;
}

TSeries TSeries::operator-() const {
  TSeries r = *this;
  for (auto& p : r.c_) p = -p;
  return r;
}

TSeries operator-(const TSeries& a, const TSeries& b) { return a + (-b); }

TSeries operator*(const TSeries& a0, const TSeries& b0) {
  TSeries a, b;
  TSeries::align(a0, b0, a, b);
  TSeries r;
  r.ram_ = a.ram_;
  if (a.known_zero() || b.known_zero()) {
    if ((a.exact() && a.known_zero()) || (b.exact() && b.known_zero())) return TSeries::zero();
    long ord = std::min(a.exact() ? TSeries::kExact : a.order_ + b.val_,
                        b.exact() ? TSeries::kExact : b.order_ + a.val_);
    return ord == TSeries::kExact ? TSeries::zero() : TSeries::zero_to(ord, a.ram_);
  }
  r.val_ = a.val_ + b.val_;
  long oa = a.exact() ? TSeries::kExact : a.order_ + b.val_;
  long ob = b.exact() ? TSeries::kExact : b.order_ + a.val_;
  r.order_ = std::min(oa, ob);
  long hi = (r.order_ == TSeries::kExact) ? a.window_end() + b.window_end() - 1 : r.order_;
  r.c_.assign(static_cast<std::size_t>(std::max(0L, hi - r.val_)), BiLaurent());
  for (long ka = 0; ka < static_cast<long>(a.c_.size()); ++ka) {
    if (a.c_[ka].zero()) continue;
    long emax = hi - (a.val_ + ka) - b.val_;  // strict bound on b offset + 1
    long kb_end = std::min<long>(b.c_.size(), emax);
    for (long kb = 0; kb < kb_end; ++kb) {
      if (b.c_[kb].zero()) continue;
      r.c_[ka + kb] += a.c_[ka] * b.c_[kb];
    }
  }
  r.normalize();
  return r;
}

namespace {
// Splits a monomial leading coefficient, throwing if it is not one.
void leading_monomial(const TSeries& a, long* i, long* j, Rational* c) {
  if (a.known_zero()) throw SeriesError("leading coefficient not a unit (zero series)");
  const BiLaurent& lead = a.coeff_s(a.val());
  if (!lead.is_monomial()) throw SeriesError("leading coefficient not a unit");
  const auto& term = *lead.terms().begin();
  *i = term.first.first;
  *j = term.first.second;
  *c = term.second;
}
}  // namespace

TSeries invert(const TSeries& a, long order) {
  long li, lj;
  Rational lc;
  leading_monomial(a, &li, &lj, &lc);
  if (order == TSeries::kExact) {
    if (a.exact()) throw SeriesError("inverting an exact polynomial requires a target order");
    order = a.order_ - 2 * a.val_;
  } else if (!a.exact()) {
    order = std::min(order, a.order_ - 2 * a.val_);
  }
  TSeries r;
  r.ram_ = a.ram_;
  r.val_ = -a.val_;
  r.order_ = order;
  long win = order - r.val_;
  if (win <= 0) throw SeriesError("inversion target order leaves an empty window");
  r.c_.assign(static_cast<std::size_t>(win), BiLaurent());
  BiLaurent inv_lead = BiLaurent::mono(-li, -lj, 1 / lc);
  r.c_[0] = inv_lead;
  for (long m = 1; m < win; ++m) {
    // sum_{k=1..m} a_{val+k} * r_{m-k} must cancel against lead * r_m.
    BiLaurent acc;
    long kmax = std::min<long>(m, static_cast<long>(a.c_.size()) - 1);
    for (long k = 1; k <= kmax; ++k) {
      if (a.c_[k].zero() || r.c_[m - k].zero()) continue;
      acc += a.c_[k] * r.c_[m - k];
    }
    r.c_[m] = -(acc * inv_lead);
  }
  r.normalize();
  return r;
}

TSeries sqrt_series(const TSeries& a, long order) {
  long li, lj;
  Rational lc;
  leading_monomial(a, &li, &lj, &lc);
  if (a.val() % 2 != 0 || li % 2 != 0 || lj % 2 != 0)
    throw SeriesError("no series square root: odd leading exponent");
  Rational root;
  if (!rational_sqrt(lc, &root))
    throw SeriesError("no series square root: leading coefficient not a rational square");
  if (order == TSeries::kExact) {
    if (a.exact()) throw SeriesError("square root of an exact polynomial requires a target order");
    order = a.order_ - a.val_ / 2;
  } else if (!a.exact()) {
    order = std::min(order, a.order_ - a.val_ / 2);
  }
  TSeries r;
  r.ram_ = a.ram_;
  r.val_ = a.val_ / 2;
  r.order_ = order;
  long win = order - r.val_;
  if (win <= 0) throw SeriesError("square root target order leaves an empty window");
  r.c_.assign(static_cast<std::size_t>(win), BiLaurent());
  BiLaurent b0 = BiLaurent::mono(li / 2, lj / 2, root);
  BiLaurent inv_2b0 = BiLaurent::mono(-li / 2, -lj / 2, 1 / (2 * root));
  r.c_[0] = b0;
  for (long m = 1; m < win; ++m) {
    BiLaurent acc;
    if (m < static_cast<long>(a.c_.size())) acc = a.c_[m];
    for (long k = 1; k < m; ++k) {
      if (r.c_[k].zero() || r.c_[m - k].zero()) continue;
      acc -= r.c_[k] * r.c_[m - k];
    }
    r.c_[m] = acc * inv_2b0;
  }
  r.normalize();
  return r;
}

TSeries pow_int(const TSeries& a, long e, long order) {
  if (e == 0) return TSeries::constant(1);
  TSeries base = e < 0 ? invert(a, order) : a;
  long n = e < 0 ? -e : e;
  TSeries r = base;
  for (long k = 1; k < n; ++k) r = r * base;
  return r;
}

TSeries residual(const TSeries& a, const TSeries& b) { return a - b; }

std::optional<CoeffLocus> first_mismatch(const TSeries& a, const TSeries& b, long order) {
  TSeries d = a - b;
  d.require_order(order);
  for (long e = d.val(); e < order; ++e) {
    const BiLaurent& p = d.coeff_s(e);
    if (!p.zero()) {
      const auto& t = *p.terms().begin();
      return CoeffLocus{e, t.first.first, t.first.second};
    }
  }
  return std::nullopt;
}

std::string TSeries::str(long max_terms) const {
  std::ostringstream os;
  long shown = 0;
  bool first = true;
  for (long e = val_; e < window_end() && shown < max_terms; ++e) {
    const BiLaurent& p = coeff_s(e);
    if (p.zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << p.str() << ")*s^" << e;
    ++shown;
  }
  if (first) os << "0";
  if (!exact()) os << " + O(s^" << order_ << ")";
  if (ram_ != 1) os << "  [t = s^" << ram_ << "]";
  return os.str();
}

std::string series_to_json(const TSeries& s) {
  nlohmann::json j;
  j["ram"] = s.ram();
  j["val"] = s.val();
  j["order"] = s.exact() ? nlohmann::json(nullptr) : nlohmann::json(s.order());
  nlohmann::json coeffs = nlohmann::json::array();
  for (long e = s.val(); e < s.support_end(); ++e) {
    const BiLaurent& p = s.coeff_s(e);
    if (p.zero()) continue;
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [k, c] : p.terms())
      terms.push_back({{"i", k.first}, {"j", k.second}, {"q", rat_str(c)}});
    coeffs.push_back({{"n", e}, {"terms", terms}});
  }
  j["coeffs"] = coeffs;
  return j.dump();
}

TSeries series_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  int ram = j.at("ram").get<int>();
  long order = j.at("order").is_null() ? TSeries::kExact : j.at("order").get<long>();
  TSeries r = order == TSeries::kExact ? TSeries::zero() : TSeries::zero_to(order, ram);
  r = r.lifted(ram);
  for (const auto& entry : j.at("coeffs")) {
    long e = entry.at("n").get<long>();
    BiLaurent p;
    for (const auto& term : entry.at("terms"))
      p.add_term(term.at("i").get<long>(), term.at("j").get<long>(),
                 rat_parse(term.at("q").get<std::string>()));
    TSeries m = TSeries::t_mono(0, p, ram).shifted_s(e);
    if (order != TSeries::kExact) m = m.truncated(order);
    r += m;
  }
  return r;
}

}  // namespace walks
