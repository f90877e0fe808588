#include "msp/hlaurent.hpp"

#include <algorithm>

namespace msp {

HPoly hpoly_mul(const HPoly& a, const HPoly& b) {
  if (a.empty() || b.empty()) return {};
  HPoly r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

HPoly hpoly_add(const HPoly& a, const HPoly& b) {
  HPoly r(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

HLaurent::HLaurent(int lo, int hi) : exact_zero_(false), lo_(lo), hi_(hi) {
  if (lo > hi + 1) throw SeriesError("empty hbar window");
  c_.assign(hi - lo + 1, Rat(0));
}

HLaurent HLaurent::rational(const HPoly& num, const HPoly& den, int shift, int hi) {
  if (den.empty() || sgn(den[0]) == 0) throw SeriesError("denominator vanishes at hbar = 0");
  HLaurent r(shift, std::max(hi, shift - 1));
  int n = hi - shift;  // number of series terms beyond the leading one
  std::vector<Rat> q(std::max(n + 1, 0), Rat(0));
  Rat inv0 = 1 / den[0];
  for (int k = 0; k <= n; ++k) {
    Rat acc = k < static_cast<int>(num.size()) ? num[k] : Rat(0);
    for (int i = 1; i <= k && i < static_cast<int>(den.size()); ++i) acc -= den[i] * q[k - i];
    q[k] = acc * inv0;
    r.c_[k] = q[k];
  }
  return r;
}

HLaurent HLaurent::monomial(const Rat& c, int e, int hi) {
  HLaurent r(std::min(e, hi + 1), hi);
  if (e <= hi) r.set(e, c);
  return r;
}

Rat HLaurent::coef(int e) const {
  if (exact_zero_ || e < lo_) return Rat(0);
  if (e > hi_) throw TruncationError("hbar exponent above retained window");
  return c_[e - lo_];
}

void HLaurent::set(int e, const Rat& v) {
  if (exact_zero_ || e < lo_ || e > hi_) throw SeriesError("hbar exponent outside window");
  c_[e - lo_] = v;
}

int HLaurent::valuation() const {
  if (exact_zero_) return 0;
  for (int e = lo_; e <= hi_; ++e)
    if (sgn(c_[e - lo_]) != 0) return e;
  return hi_ + 1;
}

int HLaurent::pole_order() const { return std::max(0, -valuation()); }

HLaurent& HLaurent::operator*=(const Rat& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

HLaurent operator+(const HLaurent& a, const HLaurent& b) {
  if (a.exact_zero_) return b;
  if (b.exact_zero_) return a;
  HLaurent r(std::min(a.lo_, b.lo_), std::min(a.hi_, b.hi_));
  for (int e = r.lo_; e <= r.hi_; ++e) r.c_[e - r.lo_] = a.coef(e) + b.coef(e);
  return r;
}

HLaurent operator-(const HLaurent& a) {
  HLaurent r = a;
  for (auto& x : r.c_) x = -x;
  return r;
}

HLaurent operator-(const HLaurent& a, const HLaurent& b) { return a + (-b); }

HLaurent operator*(const HLaurent& a, const HLaurent& b) {
  if (a.exact_zero_ || b.exact_zero_) return HLaurent();
  HLaurent r(a.lo_ + b.lo_, std::min(a.hi_ + b.lo_, b.hi_ + a.lo_));
  for (int i = a.lo_; i <= a.hi_; ++i) {
    const Rat& x = a.c_[i - a.lo_];
    if (sgn(x) == 0) continue;
    for (int j = b.lo_; i + j <= r.hi_; ++j) r.c_[i + j - r.lo_] += x * b.c_[j - b.lo_];
  }
  return r;
}

HLaurent HLaurent::inverse() const {
  int v = valuation();
  if (exact_zero_ || v > hi_) throw SeriesError("not invertible");
  // f = hbar^v g with g(0) != 0; 1/f = hbar^{-v} / g, known up to hbar^{hi-2v}.
  HPoly g;
  for (int e = v; e <= hi_; ++e) g.push_back(coef(e));
  return rational({Rat(1)}, g, -v, hi_ - 2 * v);
}

Rat residue_h(const HLaurent& f) {
  if (f.exact_zero() || f.hi() < -1) return Rat(0);
  return f.coef(-1);
}

}  // namespace msp
