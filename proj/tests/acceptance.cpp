// Acceptance battery: one pass/fail line per criterion; exit code is the
// conjunction of all checks.
#include <iostream>

#include "walks/acceptance.hpp"

int main() {
  int failures = walks::acceptance_run(std::cout);
  return failures == 0 ? 0 : 1;
}
