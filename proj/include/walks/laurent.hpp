#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "walks/rational.hpp"

namespace walks {

// Sparse Laurent polynomial in x and y over the rationals. Keys are
// (x exponent, y exponent); zero coefficients are never stored, so map
// equality is value equality.
class BiLaurent {
 public:
  using Key = std::pair<long, long>;
  using Map = std::map<Key, Rational>;

  BiLaurent() = default;

  static BiLaurent constant(const Rational& c) { return mono(0, 0, c); }
  static BiLaurent constant(long c) { return mono(0, 0, rat(c)); }
  static BiLaurent mono(long i, long j, const Rational& c) {
    BiLaurent p;
    if (sgn(c) != 0) p.terms_[{i, j}] = c;
    return p;
  }
  static BiLaurent mono(long i, long j, long c = 1) { return mono(i, j, rat(c)); }
  static BiLaurent x() { return mono(1, 0); }
  static BiLaurent y() { return mono(0, 1); }
  static BiLaurent xbar() { return mono(-1, 0); }
  static BiLaurent ybar() { return mono(0, -1); }

  const Map& terms() const { return terms_; }
  bool zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Key{0, 0});
  }
  std::size_t size() const { return terms_.size(); }

  Rational coeff(long i, long j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rational(0) : it->second;
  }
  // Constant term; for is_constant() values this is the whole polynomial.
  Rational constant_term() const { return coeff(0, 0); }

  // Extremal exponents over the support; only defined for nonzero values.
  long min_x() const;
  long max_x() const;
  long min_y() const;
  long max_y() const;
  // Pole order at x=0 (resp. y=0): max(0, -min exponent); 0 for the zero polynomial.
  long pole_x() const { return zero() ? 0 : std::max(0L, -min_x()); }
  long pole_y() const { return zero() ? 0 : std::max(0L, -min_y()); }

  void add_term(long i, long j, const Rational& c);

  BiLaurent& operator+=(const BiLaurent& o);
  BiLaurent& operator-=(const BiLaurent& o);
  BiLaurent operator-() const;
  friend BiLaurent operator+(BiLaurent a, const BiLaurent& b) { return a += b; }
  friend BiLaurent operator-(BiLaurent a, const BiLaurent& b) { return a -= b; }
  friend BiLaurent operator*(const BiLaurent& a, const BiLaurent& b);
  BiLaurent operator*(const Rational& c) const;
  bool operator==(const BiLaurent& o) const { return terms_ == o.terms_; }
  bool operator!=(const BiLaurent& o) const { return terms_ != o.terms_; }

  // Monomial substitution x^i y^j -> x^f(i,j) y^g(i,j); f,g must be injective
  // as a pair (all our uses are invertible integer-linear maps).
  BiLaurent map_exponents(const std::function<Key(Key)>& f) const;

  BiLaurent mirror_x() const;                  // x -> 1/x
  BiLaurent mirror_y() const;                  // y -> 1/y
  BiLaurent swap_xy() const;                   // x <-> y
  BiLaurent companion_exponents() const;       // x^i y^j -> x^(j-i) y^j
  BiLaurent scale_x(long k) const;             // x -> x^k
  BiLaurent scale_y(long k) const;

  BiLaurent eval_x(const Rational& v) const;   // substitute a rational for x
  BiLaurent eval_y(const Rational& v) const;
  Rational eval(const Rational& vx, const Rational& vy) const;

  // Keep only terms whose exponents satisfy the predicate.
  BiLaurent filter(const std::function<bool(long, long)>& keep) const;

  std::string str() const;  // human-readable, deterministic order

 private:
  Map terms_;
};

inline BiLaurent operator*(const Rational& c, const BiLaurent& p) { return p * c; }

}  // namespace walks
