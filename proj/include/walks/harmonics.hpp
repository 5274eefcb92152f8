#pragma once

#include <map>
#include <string>
#include <vector>

#include "walks/enumerate.hpp"
#include "walks/real.hpp"

namespace walks {

// Dense power series in one variable with Real coefficients; c[k] multiplies
// x^(k + val). Used for the closed-form harmonic boundary data.
class FSeries {
 public:
  FSeries() = default;
  explicit FSeries(std::vector<Real> c, long val = 0) : c_(std::move(c)), val_(val) {}
  static FSeries constant(const Real& a, long len);
  static FSeries variable(long len);  // x, truncated to len coefficients

  long size() const { return static_cast<long>(c_.size()); }
  long val() const { return val_; }
  const Real& at(long k) const;  // coefficient of x^k (zero below val)

  friend FSeries operator+(const FSeries& a, const FSeries& b);
  friend FSeries operator-(const FSeries& a, const FSeries& b);
  friend FSeries operator*(const FSeries& a, const FSeries& b);
  FSeries operator-() const;
  FSeries scaled(const Real& a) const;
  FSeries shifted(long k) const;  // multiply by x^k
  FSeries inv() const;            // leading coefficient must be nonzero
  FSeries sqrt_() const;          // constant term positive, val even
  FSeries truncated(long len) const;
  // Divide by x^k, verifying the dropped coefficients are negligible.
  FSeries drop_low(long k, const Real& tol) const;

 private:
  std::vector<Real> c_;  // length = truncation window
  long val_ = 0;
};

// Harmonic boundary data: Taylor coefficients of the negative-axis series
// (index i >= 1 gives H_{-i,0}; for the diagonal model H_{-2i,0}) and the
// diagonal series (index i gives H_{i,i}).
struct HarmonicBoundary {
  std::vector<Real> hminus;
  std::vector<Real> hdiag;
  long axis_stride = 1;  // 2 for the diagonal model
};

HarmonicBoundary harmonic_boundary(const StepSet& model, long terms);

// Quadrant harmonic sections used for cross-checks (closed forms exist for
// the companions of kreweras, reverse-kreweras, double-kreweras, simple,
// diagonal).
std::vector<Real> quadrant_harmonic_x(const StepSet& model, long terms);

struct HarmonicGrid {
  StepSet model;
  long imax = 0;
  long precision = 50;
  Real mu;
  Real alpha;
  std::map<std::pair<long, long>, Real> values;
  Real max_residual;   // harmonic-relation residual over checkable interior points
  bool positive = true;
  bool symmetric = true;
};

HarmonicGrid harmonic_grid(const StepSet& model, long imax, long precision);
std::string grid_json(const HarmonicGrid& g);

// Least-squares fit of u(n) = a + b n^(-beta) over the top third of the
// samples; returns a.
Real estimate_limit(const std::vector<std::pair<long, Real>>& samples,
                    const Real& beta);

struct AsymptoticsReport {
  std::string model;
  std::string target;
  Real estimate;
  Real paper_constant;
  Real rel_err;
};

// Endpoint (or total) growth-constant estimates against the closed-form
// targets, from exact counts with n <= nmax.
AsymptoticsReport asymptotics(const std::string& which, long nmax, long precision);
const std::vector<std::string>& asymptotics_targets();
// Maps (model, endpoint-or-"total") onto a named target.
std::string asymptotics_target_name(const std::string& model, const std::string& cell);
std::string asymptotics_json(const AsymptoticsReport& r);

struct DaPredictions {
  Real mu;                 // positive root of u^3 + u^2 - 18u - 43
  Real mu_residual;        // |cubic(mu)|
  Real alpha;              // pi / arccos(-c)
  Real alpha_residual;     // |defining relation residual|
  Real seq_walks;          // c00(n)/c_{-1,0}(n) at n = nmax
  Real seq_quadrant;       // sqrt(1 + q01(n)/q00(n)) at n = nmax
  Real seq_gap;            // relative gap of the two sequences
  Real axis_ratio_gap;     // H_{-1,0}/H_{-2,0} vs 2 h00/h10, relative gap
  Real kappa_residual;     // Kreweras kappa = 3 identity, max over coefficients
};

DaPredictions da_predictions(long nmax, long precision);
std::string da_json(const DaPredictions& r);

}  // namespace walks
