#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "walks/models.hpp"

namespace walks {

enum class Region { kQuadrant, kThreeQuadrant, kFullPlane };

Region region_named(const std::string& name);
std::string region_name(Region r);
bool region_contains(Region r, long i, long j);

struct WeightedStart {
  long i = 0;
  long j = 0;
  Rational weight = rat(1);
};

// Exact endpoint-resolved walk counts, layer by layer. Counts are stored as
// integers over a common table denominator so weighted starts stay exact.
class CountTable {
 public:
  CountTable(StepSet model, Region region, std::vector<WeightedStart> starts, long nmax);

  const StepSet& model() const { return model_; }
  Region region() const { return region_; }
  long nmax() const { return nmax_; }
  const Int& denom() const { return denom_; }

  // Scaled count (numerator over denom()); zero outside the stored table.
  const Int& raw(long n, long i, long j) const;
  Rational count(long n, long i, long j) const { return rat(raw(n, i, j), denom_); }
  // Sum over all endpoints at length n, as an exact rational.
  Rational total(long n) const;

  // Full coefficient layer as a Laurent polynomial.
  BiLaurent layer(long n) const;

  std::string to_csv() const;
  std::string to_json() const;

 private:
  friend CountTable count_walks(const StepSet&, Region, const std::vector<WeightedStart>&, long);
  StepSet model_;
  Region region_;
  std::vector<WeightedStart> starts_;
  long nmax_;
  Int denom_;
  long span_;  // coordinates live in [-span_, span_]
  std::vector<std::vector<Int>> layers_;
  static const Int kZero;
  long index(long i, long j) const { return (i + span_) * (2 * span_ + 1) + (j + span_); }
};

CountTable count_walks(const StepSet& model, Region region,
                       const std::vector<WeightedStart>& starts, long nmax);

inline CountTable count_walks(const StepSet& model, Region region, long nmax) {
  return count_walks(model, region, {WeightedStart{}}, nmax);
}

// Memory-light DP for large nmax: records per-length totals and the counts at
// the requested target cells only.
struct StreamCounts {
  long nmax = 0;
  Int denom = 1;
  std::vector<Int> totals;                       // index n
  std::map<std::pair<long, long>, std::vector<Int>> cells;  // target -> per-n numerators
};

StreamCounts count_walks_stream(const StepSet& model, Region region,
                                const std::vector<WeightedStart>& starts, long nmax,
                                const std::vector<std::pair<long, long>>& targets);

// Generating function sum_n t^n sum_{i,j} c_{i,j}(n) x^i y^j, order nmax+1.
TSeries assemble_series(const CountTable& table);

// Convenience: series of walks in a region, unit start at the origin.
TSeries walk_series(const StepSet& model, Region region, long order);

// Split of a three-quadrant series along the diagonal:
//   C(x,y) = xbar*U(xbar, xy) + D(xy) + ybar*L(ybar, xy)
// For diagonally symmetric models L == U and is omitted. The diagonal model
// uses xbar^2*U(xbar^2, xy). Exactness of the recomposition is verified.
struct DiagonalSplit {
  TSeries U;  // in Q[x,y][[t]]
  TSeries D;  // in Q[y][[t]]
  std::optional<TSeries> L;
};

DiagonalSplit split_UD(const TSeries& c, const StepSet& model);

// Named boundary extractions.
// cminus: sum_{i>0} c_{-i,0} x^i (walks ending on the negative x-axis, sign
// flipped so coefficients are polynomials in x).
TSeries boundary_cminus_x(const TSeries& c);
TSeries boundary_cminus_y(const TSeries& c);  // negative y-axis, variable y
TSeries section_y0(const TSeries& f);         // F(x, 0): keep j == 0 terms
TSeries section_x0(const TSeries& f);         // F(0, y): keep i == 0 terms
Rational coeff00(const TSeries& f, long n);   // [x^0 y^0 t^n]

// Weighted-start series A for the simple and diagonal models, built both from
// weighted starts and from the defining quadrant combination; the two routes
// are cross-checked to the requested order.
TSeries series_A(const StepSet& model, long order);

}  // namespace walks
