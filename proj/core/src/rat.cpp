#include "msp/rat.hpp"

namespace msp {

Rat rat(long num, long den) {
  if (den == 0) throw SeriesError("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat rat(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw SeriesError("not a rational: " + s);
  if (r.get_den() == 0) throw SeriesError("zero denominator");
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(); }

Int factorial(unsigned n) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Rat binomial(const Rat& top, unsigned k) {
  Rat b = 1;
  for (unsigned i = 0; i < k; ++i) b *= (top - i) / Rat(i + 1);
  return b;
}

Rat harmonic(unsigned n) {
  Rat h = 0;
  for (unsigned m = 1; m <= n; ++m) h += rat(1, m);
  return h;
}

}  // namespace msp
