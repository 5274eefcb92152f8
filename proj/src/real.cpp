#include "walks/real.hpp"

#include <cmath>

namespace walks {

namespace {
long g_digits = 50;
}

void Real::set_working_digits(long digits) { g_digits = digits < 10 ? 10 : digits; }
long Real::working_digits() { return g_digits; }

mpfr_prec_t Real::working_bits() {
  // digits * log2(10), plus guard bits for long recursions.
  return static_cast<mpfr_prec_t>(g_digits * 3.3219280948873623 + 64);
}

std::string Real::str(long digits) const {
  if (digits <= 0) digits = g_digits;
  char fmt[32];
  std::snprintf(fmt, sizeof(fmt), "%%.%ldRg", digits);
  char* out = nullptr;
  if (mpfr_asprintf(&out, fmt, v_) < 0) return "nan";
  std::string s(out);
  mpfr_free_str(out);
  return s;
}

}  // namespace walks
