#pragma once

#include <string>
#include <vector>

#include "walks/invariants.hpp"

namespace walks {

// Residual checks of the step-by-step functional equations, all built from
// independently enumerated walk series.
//
// Selectors:
//   base       three-quadrant equation for C(x,y)       (Table-1 models)
//   eq-u       the combined U/D equation                  (Table-1 models)
//   eq-d       the diagonal-section equation              (Table-1 models)
//   quadrant   the quadrant equation for the companion    (Table-1 models)
//   system     the scarecrow / asymmetric three-series systems
//   all        everything applicable to the model
std::vector<CheckReport> check_funceqs(const StepSet& model, long order_t,
                                       const std::string& which = "all");

}  // namespace walks
