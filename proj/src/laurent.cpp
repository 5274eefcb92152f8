#include "walks/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace walks {

long BiLaurent::min_x() const {
  long m = terms_.begin()->first.first;
  for (const auto& [k, c] : terms_) m = std::min(m, k.first);
  return m;
}

long BiLaurent::max_x() const {
  long m = terms_.begin()->first.first;
  for (const auto& [k, c] : terms_) m = std::max(m, k.first);
  return m;
}

long BiLaurent::min_y() const {
  long m = terms_.begin()->first.second;
  for (const auto& [k, c] : terms_) m = std::min(m, k.second);
  return m;
}

long BiLaurent::max_y() const {
  long m = terms_.begin()->first.second;
  for (const auto& [k, c] : terms_) m = std::max(m, k.second);
  return m;
}

void BiLaurent::add_term(long i, long j, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

BiLaurent& BiLaurent::operator+=(const BiLaurent& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

BiLaurent& BiLaurent::operator-=(const BiLaurent& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

BiLaurent BiLaurent::operator-() const {
  BiLaurent r;
  for (const auto& [k, c] : terms_) r.terms_[k] = -c;
  return r;
}

BiLaurent operator*(const BiLaurent& a, const BiLaurent& b) {
  BiLaurent r;
  if (a.zero() || b.zero()) return r;
  Rational tmp;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      tmp = ca * cb;
      r.add_term(ka.first + kb.first, ka.second + kb.second, tmp);
    }
  }
  return r;
}

BiLaurent BiLaurent::operator*(const Rational& c) const {
  BiLaurent r;
  if (sgn(c) == 0) return r;
  for (const auto& [k, v] : terms_) r.terms_[k] = v * c;
  return r;
}

BiLaurent BiLaurent::map_exponents(const std::function<Key(Key)>& f) const {
  BiLaurent r;
  for (const auto& [k, c] : terms_) {
    Key nk = f(k);
    r.add_term(nk.first, nk.second, c);
  }
  return r;
}

BiLaurent BiLaurent::mirror_x() const {
  return map_exponents([](Key k) { return Key{-k.first, k.second}; });
}

BiLaurent BiLaurent::mirror_y() const {
  return map_exponents([](Key k) { return Key{k.first, -k.second}; });
}

BiLaurent BiLaurent::swap_xy() const {
  return map_exponents([](Key k) { return Key{k.second, k.first}; });
}

BiLaurent BiLaurent::companion_exponents() const {
  return map_exponents([](Key k) { return Key{k.second - k.first, k.second}; });
}

BiLaurent BiLaurent::scale_x(long s) const {
  return map_exponents([s](Key k) { return Key{s * k.first, k.second}; });
}

BiLaurent BiLaurent::scale_y(long s) const {
  return map_exponents([s](Key k) { return Key{k.first, s * k.second}; });
}

namespace {
Rational rat_pow(const Rational& v, long e) {
  if (e == 0) return Rational(1);
  Rational base = v;
  if (e < 0) {
    if (sgn(v) == 0) throw std::domain_error("0 raised to a negative power");
    base = 1 / v;
    e = -e;
  }
  Rational r(1);
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}
}  // namespace

BiLaurent BiLaurent::eval_x(const Rational& v) const {
  BiLaurent r;
  for (const auto& [k, c] : terms_) r.add_term(0, k.second, c * rat_pow(v, k.first));
  return r;
}

BiLaurent BiLaurent::eval_y(const Rational& v) const {
  BiLaurent r;
  for (const auto& [k, c] : terms_) r.add_term(k.first, 0, c * rat_pow(v, k.second));
  return r;
}

Rational BiLaurent::eval(const Rational& vx, const Rational& vy) const {
  Rational r(0);
  for (const auto& [k, c] : terms_) r += c * rat_pow(vx, k.first) * rat_pow(vy, k.second);
  return r;
}

BiLaurent BiLaurent::filter(const std::function<bool(long, long)>& keep) const {
  BiLaurent r;
  for (const auto& [k, c] : terms_)
    if (keep(k.first, k.second)) r.terms_[k] = c;
  return r;
}

std::string BiLaurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << rat_str(c);
    if (k.first != 0) os << "*x^" << k.first;
    if (k.second != 0) os << "*y^" << k.second;
  }
  return os.str();
}

}  // namespace walks
