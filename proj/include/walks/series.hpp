#pragma once

#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "walks/laurent.hpp"

namespace walks {

struct SeriesError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Location of a first nonzero coefficient, for check diagnostics.
struct CoeffLocus {
  long n;  // exponent of s (equals the t exponent when ram == 1)
  long i;  // exponent of x
  long j;  // exponent of y
};

// Truncated Laurent series in s, where t = s^ram, with BiLaurent coefficients.
// Coefficients are known exactly for s exponents in [val, order); order may be
// the kExact sentinel, meaning the value is an exact Laurent polynomial whose
// coefficients beyond the stored window are all zero.
class TSeries {
 public:
  static constexpr long kExact = std::numeric_limits<long>::max() / 4;

  TSeries() : ram_(1), val_(0), order_(kExact) {}

  // --- constructors -------------------------------------------------------
  static TSeries zero() { return TSeries(); }
  // Zero, but only known to the given order.
  static TSeries zero_to(long order, int ram = 1);
  // Exact monomial c * x^i y^j t^k (s exponent k*ram).
  static TSeries t_mono(long k, const BiLaurent& c, int ram = 1);
  static TSeries t_mono(long k, const Rational& c, int ram = 1) {
    return t_mono(k, BiLaurent::constant(c), ram);
  }
  static TSeries constant(const BiLaurent& c) { return t_mono(0, c); }
  static TSeries constant(const Rational& c) { return t_mono(0, c); }
  static TSeries constant(long c) { return t_mono(0, rat(c)); }
  // Exact polynomial from (t-exponent, coefficient) pairs.
  static TSeries poly(const std::vector<std::pair<long, BiLaurent>>& terms, int ram = 1);
  // 1 - t*S for a step polynomial S (the kernel shape); exact.
  static TSeries one_minus_t(const BiLaurent& s);

  // --- basic queries -------------------------------------------------------
  int ram() const { return ram_; }
  long val() const { return val_; }      // s units
  long order() const { return order_; }  // s units; kExact for exact values
  bool exact() const { return order_ == kExact; }
  bool known_zero() const;  // all stored coefficients vanish

  // Coefficient of s^e. Below val (or outside an exact support): zero.
  // At or above a finite order: SeriesError("insufficient truncation").
  const BiLaurent& coeff_s(long e) const;
  // Coefficient of t^n (s exponent n*ram).
  const BiLaurent& coeff_t(long n) const { return coeff_s(n * ram_); }
  // Coefficient of x^i y^j t^n.
  Rational coeff(long i, long j, long n) const { return coeff_t(n).coeff(i, j); }

  // Largest pole order at x=0 (resp. y=0) over stored coefficients.
  long max_pole_x() const;
  long max_pole_y() const;

  // First nonzero stored coefficient, if any.
  std::optional<CoeffLocus> first_nonzero() const;

  // One past the last stored s exponent (coefficients beyond are known zero
  // for exact values, unknown past order for truncated ones).
  long support_end() const { return val_ + static_cast<long>(c_.size()); }

  void require_order(long n) const {
    if (order_ < n)
      throw SeriesError("insufficient truncation: have order " + std::to_string(order_) +
                        ", need " + std::to_string(n));
  }

  // --- structural operations ----------------------------------------------
  TSeries truncated(long order) const;  // clip to a (possibly smaller) order
  TSeries lifted(int new_ram) const;    // refine the grid; new_ram % ram == 0
  // Inverse of lifted(): fails if any off-grid coefficient is nonzero.
  TSeries restricted(int new_ram) const;
  TSeries shifted_s(long e) const;  // multiply by s^e
  TSeries shifted_t(long k) const { return shifted_s(k * ram_); }

  // Apply a map to every coefficient (e.g. exponent mirror); the map must be
  // linear so truncation information stays valid.
  TSeries map_coeffs(const std::function<BiLaurent(const BiLaurent&)>& f) const;
  TSeries mul_coeff(const BiLaurent& c) const;  // multiply by an x,y polynomial
  TSeries mul_rat(const Rational& c) const;

  TSeries eval_x(const Rational& v) const { return map_coeffs([&](const BiLaurent& p) { return p.eval_x(v); }); }
  TSeries eval_y(const Rational& v) const { return map_coeffs([&](const BiLaurent& p) { return p.eval_y(v); }); }
  TSeries eval_x1y1() const {
    return map_coeffs([](const BiLaurent& p) { return BiLaurent::constant(p.eval(rat(1), rat(1))); });
  }

  // --- arithmetic -----------------------------------------------------------
  friend TSeries operator+(const TSeries& a, const TSeries& b);
  friend TSeries operator-(const TSeries& a, const TSeries& b);
  TSeries operator-() const;
  friend TSeries operator*(const TSeries& a, const TSeries& b);
  TSeries& operator+=(const TSeries& o) { return *this = *this + o; }
  TSeries& operator-=(const TSeries& o) { return *this = *this - o; }
  TSeries& operator*=(const TSeries& o) { return *this = *this * o; }

  std::string str(long max_terms = 16) const;

 private:
  friend TSeries invert(const TSeries&, long);
  friend TSeries sqrt_series(const TSeries&, long);

  int ram_;
  long val_;
  long order_;
  std::vector<BiLaurent> c_;  // c_[k] = coefficient of s^(val_+k)

  static const BiLaurent kZeroCoeff;
  void normalize();
  long window_end() const { return val_ + static_cast<long>(c_.size()); }
  static void align(const TSeries& a, const TSeries& b, TSeries& a2, TSeries& b2);
};

// Multiplicative inverse, correct to `order` (s units). `order` is mandatory
// for exact inputs; for truncated inputs it defaults to the best valid order.
// The leading coefficient must be a (rational multiple of a) monomial.
TSeries invert(const TSeries& a, long order = TSeries::kExact);

// Square root with leading coefficient chosen positive. The leading term must
// sit at an even s exponent and be a monomial with even exponents and a square
// rational coefficient.
TSeries sqrt_series(const TSeries& a, long order = TSeries::kExact);

TSeries pow_int(const TSeries& a, long e, long order = TSeries::kExact);

inline TSeries operator*(const Rational& c, const TSeries& a) { return a.mul_rat(c); }
inline TSeries operator*(const BiLaurent& c, const TSeries& a) { return a.mul_coeff(c); }

// a - b restricted to their common window; both must reach `order` if given.
TSeries residual(const TSeries& a, const TSeries& b);
// First coefficient where a and b disagree, scanning s exponents < order.
std::optional<CoeffLocus> first_mismatch(const TSeries& a, const TSeries& b, long order);

std::string series_to_json(const TSeries& s);
TSeries series_from_json(const std::string& text);

}  // namespace walks
