#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "walks/series.hpp"

namespace walks {

struct ModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Step = std::pair<int, int>;

// A small-step model: a subset of {-1,0,1}^2 minus the null step, optionally
// carrying a catalog name.
class StepSet {
 public:
  StepSet() = default;
  explicit StepSet(std::set<Step> steps, std::string name = "");

  // Catalog lookup; throws ModelError with the list of valid names.
  static StepSet named(const std::string& name);
  static const std::vector<std::string>& catalog();

  const std::set<Step>& steps() const { return steps_; }
  const std::string& name() const { return name_; }
  std::size_t size() const { return steps_.size(); }
  bool has(int dx, int dy) const { return steps_.count({dx, dy}) > 0; }
  bool diagonally_symmetric() const;

  BiLaurent step_polynomial() const;  // sum of x^dx y^dy

  bool operator==(const StepSet& o) const { return steps_ == o.steps_; }

 private:
  std::set<Step> steps_;
  std::string name_;
};

// Decomposition of a step polynomial along one variable:
//   S(x,y) = ybar*hminus(x) + h0(x) + y*hplus(x)
//          = xbar*vminus(y) + v0(y) + x*vplus(y)
// Each entry is a univariate Laurent polynomial stored as a BiLaurent.
struct Splits {
  BiLaurent hminus, h0, hplus;  // functions of x
  BiLaurent vminus, v0, vplus;  // functions of y
};

Splits splits(const StepSet& m);

// Image of m under (i,j) -> (j-i, j). The diagonal model is mapped through
// half steps and yields {NE, N, SW, S}; models with NW or SE steps other than
// the diagonal one are rejected.
StepSet companion(const StepSet& m);

// Kernel 1 - t*S(x,y) as an exact polynomial.
TSeries kernel(const StepSet& m);

// Discriminant in x of x*(1 - t*S): (1 - t*v0(y))^2 - 4 t^2 vminus(y) vplus(y),
// exact, a polynomial in t with Laurent coefficients in y.
TSeries discriminant_y(const StepSet& m);

}  // namespace walks
