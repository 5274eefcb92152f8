#pragma once

#include <ostream>

namespace walks {

// Runs the full verification battery at the shipped thresholds, printing one
// pass/fail line per criterion (plus detail lines). Returns the number of
// failed criteria.
int acceptance_run(std::ostream& os);

}  // namespace walks
