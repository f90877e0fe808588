#pragma once

#include <array>

#include "msp/qseries.hpp"

namespace msp {

inline constexpr int kTPrimeDeg = 3;

// Polynomial in t' truncated above degree 3.
template <class R>
struct TPrime {
  std::array<R, kTPrimeDeg + 1> c{};

  TPrime() { c.fill(RingTraits<R>::zero()); }
  explicit TPrime(R c0) : TPrime() { c[0] = std::move(c0); }

  const R& operator[](int j) const { return c.at(j); }
  R& operator[](int j) { return c.at(j); }

  TPrime& operator+=(const TPrime& o) {
    for (int j = 0; j <= kTPrimeDeg; ++j) c[j] += o.c[j];
    return *this;
  }
  TPrime& operator-=(const TPrime& o) {
    for (int j = 0; j <= kTPrimeDeg; ++j) c[j] -= o.c[j];
    return *this;
  }
  TPrime& operator*=(const Rat& s) {
    for (auto& x : c) x *= s;
    return *this;
  }
  friend TPrime operator+(TPrime a, const TPrime& b) { return a += b; }
  friend TPrime operator-(TPrime a, const TPrime& b) { return a -= b; }
  friend TPrime operator-(TPrime a) { return a *= Rat(-1); }
  friend TPrime operator*(TPrime a, const Rat& s) { return a *= s; }
  friend TPrime operator*(const Rat& s, TPrime a) { return a *= s; }
  friend TPrime operator*(const TPrime& a, const TPrime& b) {
    TPrime r;
    for (int i = 0; i <= kTPrimeDeg; ++i)
      for (int j = 0; i + j <= kTPrimeDeg; ++j) r.c[i + j] += a.c[i] * b.c[j];
    return r;
  }
  friend bool operator==(const TPrime& a, const TPrime& b) { return a.c == b.c; }
};

template <>
struct RingTraits<TPrime<Rat>> {
  static TPrime<Rat> zero() { return TPrime<Rat>(); }
  static TPrime<Rat> one() { return TPrime<Rat>(Rat(1)); }
  static bool is_zero(const TPrime<Rat>& p) {
    for (const auto& x : p.c)
      if (sgn(x) != 0) return false;
    return true;
  }
};

using TPrimePoly = TPrime<Rat>;
// q-series with t'-graded coefficients, e.g. eta(q) of a regularizing pair.
using TQSeries = Series<TPrimePoly>;

// Coefficient of t'^j.
inline QSeries coe_tprime(const TQSeries& f, int j) {
  QSeries r(f.order());
  for (int d = 0; d <= f.order(); ++d) r[d] = f[d][j];
  return r;
}

inline TQSeries lift_tprime(const QSeries& f, int j = 0) {
  TQSeries r(f.order());
  for (int d = 0; d <= f.order(); ++d) r[d][j] = f[d];
  return r;
}

}  // namespace msp
