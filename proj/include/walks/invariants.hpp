#pragma once

#include <optional>
#include <string>
#include <vector>

#include "walks/enumerate.hpp"
#include "walks/models.hpp"

namespace walks {

// Series with a structured denominator t^tpow * den(x,y), where den is a
// Laurent polynomial whose unit part is invertible at x = y = 0 (monomial
// factors are allowed). All table entries and certificates fit this shape,
// and identities between such values are checked after cross-multiplying, so
// no series division by (1+x)-type factors is ever needed.
class RationalSeries {
 public:
  RationalSeries() : num_(TSeries::zero()), den_(BiLaurent::constant(1)) {}
  RationalSeries(TSeries num, long tpow = 0, BiLaurent den = BiLaurent::constant(1));

  static RationalSeries from_series(TSeries s) { return RationalSeries(std::move(s)); }

  const TSeries& num() const { return num_; }
  long tpow() const { return tpow_; }
  const BiLaurent& den() const { return den_; }

  RationalSeries operator+(const RationalSeries& o) const;
  RationalSeries operator-(const RationalSeries& o) const;
  RationalSeries operator*(const RationalSeries& o) const;
  RationalSeries operator-() const;
  RationalSeries mul_rat(const Rational& c) const;

  // Pole order at x=0 (resp. y=0) of the t^n coefficient, maximized over the
  // known window; the unit part of the denominator does not contribute.
  long max_pole_x() const;
  long max_pole_y() const;

  // Expand to a plain series; requires the denominator polynomial to be a
  // monomial times a unit with monomial leading term (true when den == 1).
  TSeries to_series(long order) const;

  // Substitute a positive-valuation series for y (resp. x) and divide by the
  // substituted denominator.
  TSeries eval_y(const TSeries& arg, long order) const;
  TSeries eval_x(const TSeries& arg, long order) const;
  // Specialize x (resp. y) to a rational point, keeping the other variable.
  RationalSeries at_x(const Rational& v) const;
  RationalSeries at_y(const Rational& v) const;

 private:
  TSeries num_;
  long tpow_ = 0;
  BiLaurent den_;
};

// a == b up to order (t units), by cross-multiplication.
std::optional<CoeffLocus> rs_mismatch(const RationalSeries& a, const RationalSeries& b,
                                      long order_t);

struct CheckReport {
  std::string check;
  std::string model;
  long order = 0;
  bool pass = false;
  std::optional<CoeffLocus> first_failure;
};

std::string report_json(const CheckReport& r);

// Residual sum_i coeff_i * factor_i - constant; zero iff the identity holds.
TSeries check_linear_identity(const std::vector<std::pair<TSeries, TSeries>>& terms,
                              const TSeries& constant, long order_t);

// Divisibility by the kernel of S in the bounded-pole sense, checked at finite
// truncation: every t-coefficient of F/K up to order must have pole orders at
// x=0 and y=0 within the bounds.
struct Divisibility {
  bool divisible = false;
  long max_pole_x = 0;
  long max_pole_y = 0;
  RationalSeries quotient;  // F/K, carried over F's denominator
};

Divisibility check_divisible(const RationalSeries& f, const StepSet& s, long bound_x,
                             long bound_y, long order_t);

// Exact division of a polynomial identity: returns q with f == kernel(S)*q,
// or nothing if the division is not exact. f and q are exact polynomials.
std::optional<TSeries> exact_div_by_kernel(const TSeries& f, const StepSet& s);

// A pair of invariants (I(x), J(y)) for the kernel of `model`, together with
// a certificate H = (I-J)/K.
struct InvariantPair {
  RationalSeries I;
  RationalSeries J;
  StepSet model;
  RationalSeries cert;
  bool cert_known = false;  // certificate supplied rather than computed
  long bound_x = 2;
  long bound_y = 2;
};

// Verifies the certificate identity exactly (when known) and the pole bounds
// of (I-J)/K up to order.
CheckReport check_invariant_pair(const InvariantPair& p, long order_t);

// Known rational invariants and the xy-decoupling pair for the nine companion
// step sets. I0/J0 exist only for the finite-group companions.
struct KnownInvariants {
  std::optional<RationalSeries> I0, J0;
  RationalSeries f, g;
};

// Keyed by step-set equality against the nine companion sets.
KnownInvariants known_invariants(const StepSet& companion_steps);

// Quadrant-based pair: I1 = t x hminus(x) Q(x,0) - f(x),
// J1 = -t y vminus(y) Q(0,y) + t Q00 [if SW step] + g(y); the certificate is
// h(x,y) - x y Q(x,y) with h the decoupling certificate of xy.
InvariantPair build_I1J1(const StepSet& companion_steps, const TSeries& quadrant_series,
                         long order_t);

// Decoupling data for the three-quadrant construction (four models only):
//   y = (t*v0(y) + 2tx*vplus(y) - 1) G(y) + F(x) + K(x,y) H(x,y)
// plus the classical symmetric pair f = g decoupling xy modulo the model's
// own kernel.
struct Decoupling {
  RationalSeries F, G, H;
  RationalSeries f_classic, g_classic;
};

Decoupling decoupling(const StepSet& model);

// Builds the pair (R(x)^2, Delta(y) S(y)^2) from the split series of the
// three-quadrant walks, with its certificate.
struct ThreeQuadrantPair {
  RationalSeries R, S;
  InvariantPair pair;
};

ThreeQuadrantPair build_three_quadrant_pair(const StepSet& model, const TSeries& U,
                                            const TSeries& D, long order_t);

// The invariant-lemma test: true iff every t-coefficient of (I-J)/K is a
// multiple of xy up to order; the common constant value is returned.
struct LemmaResult {
  bool is_constant = false;
  TSeries value;  // series in t only, valid when is_constant
};

LemmaResult invariant_lemma_check(const RationalSeries& I, const RationalSeries& J,
                                  const StepSet& model, long order_t);

}  // namespace walks
