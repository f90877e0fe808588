#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace msp {

using Rat = mpq_class;
using Int = mpz_class;

// Thrown for violated preconditions on series operations.
struct SeriesError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a requested coefficient lies outside the retained window.
// Callers treat it as "raise the truncation order".
struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rat rat(long num, long den = 1);
Rat rat(const std::string& s);
std::string to_string(const Rat& r);

Int factorial(unsigned n);
Rat binomial(const Rat& top, unsigned k);
Rat harmonic(unsigned n);

}  // namespace msp
