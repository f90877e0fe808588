#pragma once

#include <string>
#include <vector>

#include "msp/qseries.hpp"

namespace msp {

// Dense polynomial in alpha, ascending coefficients, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  Poly(std::vector<Rat> c);  // NOLINT
  static Poly constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }
  static Poly x() { return Poly(std::vector<Rat>{Rat(0), Rat(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rat operator[](int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rat(0); }
  const Rat& lead() const { return c_.back(); }

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Rat& s);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  // alpha d/dalpha
  Poly theta() const;
  Rat eval(const Rat& x) const;
  std::string str() const;

 private:
  void trim();
  std::vector<Rat> c_;
};

// a = b*quot + rem
void poly_divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem);
Poly poly_gcd(Poly a, Poly b);

// Reduced quotient of polynomials in alpha with a monic denominator.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Poly::constant(Rat(1))) {}
  RatFunc(const Poly& num, const Poly& den);
  RatFunc(const Rat& c) : RatFunc(Poly::constant(c), Poly::constant(Rat(1))) {}  // NOLINT

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  RatFunc theta() const;
  // Expansion in q with alpha = 5^5 q.
  QSeries to_q(int order) const;
  std::string str() const;

 private:
  Poly num_;
  Poly den_;
};

inline const Rat kAlphaScale = Rat(3125);

}  // namespace msp
