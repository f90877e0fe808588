#pragma once

#include <vector>

#include "msp/qseries.hpp"

namespace msp {

// Polynomial in hbar, ascending coefficients.
using HPoly = std::vector<Rat>;

HPoly hpoly_mul(const HPoly& a, const HPoly& b);
HPoly hpoly_add(const HPoly& a, const HPoly& b);

// Truncated Laurent series sum_{e=lo}^{hi} c_e hbar^e.
// Products keep the pole part exactly and drop only what lies above hi.
// A default-constructed HLaurent is an exact zero with no truncation.
class HLaurent {
 public:
  HLaurent() = default;
  HLaurent(int lo, int hi);

  // hbar^shift * num/den expanded up to hbar^hi; den(0) must be nonzero.
  static HLaurent rational(const HPoly& num, const HPoly& den, int shift, int hi);
  static HLaurent monomial(const Rat& c, int e, int hi);

  bool exact_zero() const { return exact_zero_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  // Zero below lo; throws TruncationError above hi.
  Rat coef(int e) const;
  void set(int e, const Rat& v);

  // Lowest exponent carrying a nonzero coefficient; hi+1 when all vanish.
  int valuation() const;
  int pole_order() const;

  HLaurent& operator*=(const Rat& s);
  friend HLaurent operator+(const HLaurent& a, const HLaurent& b);
  friend HLaurent operator-(const HLaurent& a, const HLaurent& b);
  friend HLaurent operator-(const HLaurent& a);
  friend HLaurent operator*(const HLaurent& a, const HLaurent& b);
  friend HLaurent operator*(HLaurent a, const Rat& s) { return a *= s; }

  // 1/f; needs a nonzero leading coefficient.
  HLaurent inverse() const;

 private:
  bool exact_zero_ = true;
  int lo_ = 0;
  int hi_ = 0;
  std::vector<Rat> c_;
};

Rat residue_h(const HLaurent& f);

template <>
struct RingTraits<HLaurent> {
  static HLaurent zero() { return HLaurent(); }
  static bool is_zero(const HLaurent& f) { return f.exact_zero() || f.valuation() > f.hi(); }
};

}  // namespace msp
