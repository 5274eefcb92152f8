#pragma once

#include <mpfr.h>

#include <string>

#include "walks/rational.hpp"

namespace walks {

// Minimal RAII wrapper over mpfr_t. Precision is taken from a module-wide
// default (set_working_digits) at construction time; round-to-nearest.
class Real {
 public:
  Real() { mpfr_init2(v_, working_bits()); mpfr_set_zero(v_, 1); }
  Real(int x) : Real(static_cast<long>(x)) {}
  Real(long x) : Real() { mpfr_set_si(v_, x, MPFR_RNDN); }
  explicit Real(double x) : Real() { mpfr_set_d(v_, x, MPFR_RNDN); }
  Real(const Rational& q) : Real() { mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }
  Real(const Int& z) : Real() { mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN); }
  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept { mpfr_init2(v_, working_bits()); mpfr_swap(v_, o.v_); }
  Real& operator=(const Real& o) {
    if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  static void set_working_digits(long digits);
  static long working_digits();
  static mpfr_prec_t working_bits();

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  friend Real operator+(const Real& a, const Real& b) { Real r; mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend Real operator-(const Real& a, const Real& b) { Real r; mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend Real operator*(const Real& a, const Real& b) { Real r; mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend Real operator/(const Real& a, const Real& b) { Real r; mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  Real operator-() const { Real r; mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }
  Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

  bool operator<(const Real& o) const { return mpfr_cmp(v_, o.v_) < 0; }
  bool operator>(const Real& o) const { return mpfr_cmp(v_, o.v_) > 0; }
  bool operator<=(const Real& o) const { return mpfr_cmp(v_, o.v_) <= 0; }
  bool operator>=(const Real& o) const { return mpfr_cmp(v_, o.v_) >= 0; }
  bool is_zero() const { return mpfr_zero_p(v_); }
  int sign() const { return mpfr_sgn(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  std::string str(long digits = 0) const;

  friend Real abs(const Real& a) { Real r; mpfr_abs(r.v_, a.v_, MPFR_RNDN); return r; }
  friend Real sqrt(const Real& a) { Real r; mpfr_sqrt(r.v_, a.v_, MPFR_RNDN); return r; }
  friend Real log(const Real& a) { Real r; mpfr_log(r.v_, a.v_, MPFR_RNDN); return r; }
  friend Real exp(const Real& a) { Real r; mpfr_exp(r.v_, a.v_, MPFR_RNDN); return r; }
  friend Real acos(const Real& a) { Real r; mpfr_acos(r.v_, a.v_, MPFR_RNDN); return r; }
  friend Real pow(const Real& a, const Real& b) { Real r; mpfr_pow(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend Real gamma_fn(const Real& a) { Real r; mpfr_gamma(r.v_, a.v_, MPFR_RNDN); return r; }
  static Real pi() { Real r; mpfr_const_pi(r.v_, MPFR_RNDN); return r; }
  friend Real pow_si(const Real& a, long e) { Real r; mpfr_pow_si(r.v_, a.v_, e, MPFR_RNDN); return r; }

 private:
  mpfr_t v_;
};

}  // namespace walks
