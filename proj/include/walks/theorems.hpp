#pragma once

#include <string>
#include <vector>

#include "walks/invariants.hpp"

namespace walks {

// One verified closed-form identity: the named right-hand side, assembled
// from solved algebraic series, compared coefficient-by-coefficient with the
// enumerated left-hand side through t^order.
struct TheoremCheck {
  std::string id;
  long order = 0;
  bool pass = false;
  std::optional<CoeffLocus> residual_locus;
};

std::string theorem_json(const TheoremCheck& c);

// Claimed algebraic degrees for the series behind a check id. These are
// echoed as metadata only: minimal polynomials are never recomputed here.
std::string degree_metadata(const std::string& id);

std::vector<TheoremCheck> verify_kreweras(long order);
std::vector<TheoremCheck> verify_reverse_kreweras(long order);
std::vector<TheoremCheck> verify_double_kreweras(long order);
std::vector<TheoremCheck> verify_da(long order);
std::vector<TheoremCheck> verify_simple(long order);
std::vector<TheoremCheck> verify_diagonal(long order);
std::vector<TheoremCheck> verify_quadrant_formulas(long order);

// Dispatch by check id (K-U, K-D, K-excursions, K-C11, RK, RK-excursions,
// RK-C11, DK, DK-excursions, DK-C11, DA, DA-C11, SIMPLE, DIAG, Q-RK, Q-K,
// Q-DK); returns the matching subset.
std::vector<TheoremCheck> verify_theorem(const std::string& id, long order);
const std::vector<std::string>& theorem_ids();

}  // namespace walks
