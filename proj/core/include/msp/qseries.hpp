#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "msp/rat.hpp"

namespace msp {

template <class R>
struct RingTraits;

template <>
struct RingTraits<Rat> {
  static Rat zero() { return Rat(0); }
  static Rat one() { return Rat(1); }
  static bool is_zero(const Rat& r) { return sgn(r) == 0; }
};

// Truncated power series sum_{d=0}^{N} c_d q^d over a coefficient ring R.
template <class R>
class Series {
 public:
  Series() : c_(1, RingTraits<R>::zero()) {}
  explicit Series(int order) : c_(checked(order) + 1, RingTraits<R>::zero()) {}
  Series(int order, std::vector<R> coeffs) : c_(std::move(coeffs)) {
    c_.resize(checked(order) + 1, RingTraits<R>::zero());
  }

  static Series constant(int order, R value) {
    Series s(order);
    s.c_[0] = std::move(value);
    return s;
  }
  static Series monomial(int order, int deg, R value) {
    Series s(order);
    if (deg >= 0 && deg <= order) s.c_[deg] = std::move(value);
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const R& operator[](int d) const { return c_.at(d); }
  R& operator[](int d) { return c_.at(d); }
  const std::vector<R>& coeffs() const { return c_; }

  Series truncated(int n) const {
    if (n > order()) throw TruncationError("cannot raise truncation order");
    return Series(n, std::vector<R>(c_.begin(), c_.begin() + n + 1));
  }

  // Lowest degree with a nonzero coefficient, or -1 for the zero series.
  int valuation() const {
    for (int d = 0; d <= order(); ++d)
      if (!RingTraits<R>::is_zero(c_[d])) return d;
    return -1;
  }
  bool is_zero() const { return valuation() < 0; }

  Series& operator+=(const Series& o) {
    shrink(o.order());
    for (int d = 0; d <= order(); ++d) c_[d] += o.c_[d];
    return *this;
  }
  Series& operator-=(const Series& o) {
    shrink(o.order());
    for (int d = 0; d <= order(); ++d) c_[d] -= o.c_[d];
    return *this;
  }
  Series& operator*=(const Rat& s) {
    for (auto& x : c_) x *= s;
    return *this;
  }

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator-(Series a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend Series operator*(Series a, const Rat& s) { return a *= s; }
  friend Series operator*(const Rat& s, Series a) { return a *= s; }
  friend Series operator*(const Series& a, const Series& b) {
    int n = std::min(a.order(), b.order());
    Series r(n);
    int va = std::max(a.valuation(), 0), vb = std::max(b.valuation(), 0);
    for (int i = va; i <= n; ++i) {
      if (RingTraits<R>::is_zero(a.c_[i])) continue;
      for (int j = vb; i + j <= n; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }
  friend bool operator==(const Series& a, const Series& b) {
    int n = std::min(a.order(), b.order());
    for (int d = 0; d <= n; ++d)
      if (!(a.c_[d] == b.c_[d])) return false;
    return true;
  }

 private:
  static int checked(int order) {
    if (order < 0) throw SeriesError("negative truncation order");
    return order;
  }
  void shrink(int n) {
    if (n < order()) c_.resize(n + 1);
  }
  std::vector<R> c_;
};

using QSeries = Series<Rat>;

// First degree where a and b differ (up to the common order), or -1.
template <class R>
int first_difference(const Series<R>& a, const Series<R>& b) {
  int n = std::min(a.order(), b.order());
  for (int d = 0; d <= n; ++d)
    if (!(a[d] == b[d])) return d;
  return -1;
}

// q d/dq
template <class R>
Series<R> dq(const Series<R>& f) {
  Series<R> r = f;
  for (int d = 0; d <= f.order(); ++d) r[d] *= Rat(d);
  return r;
}

// Inverse of dq with vanishing constant term.
template <class R>
Series<R> dq_inv(const Series<R>& f) {
  if (!RingTraits<R>::is_zero(f[0])) throw SeriesError("antiderivative does not vanish at -infinity");
  Series<R> r = f;
  for (int d = 1; d <= f.order(); ++d) r[d] *= rat(1, d);
  return r;
}

// exp(f) for f with zero constant term: n e_n = sum_{k=1}^{n} k f_k e_{n-k}.
template <class R>
Series<R> series_exp(const Series<R>& f) {
  if (!RingTraits<R>::is_zero(f[0])) throw SeriesError("exp requires zero constant term");
  int n = f.order();
  Series<R> e(n);
  e[0] = RingTraits<R>::one();
  for (int m = 1; m <= n; ++m) {
    R acc = RingTraits<R>::zero();
    for (int k = 1; k <= m; ++k) acc += f[k] * e[m - k] * Rat(k);
    e[m] = acc * rat(1, m);
  }
  return e;
}

// log(1 + z) for z with zero constant term: n g_n = n z_n - sum_{k=1}^{n-1} k g_k z_{n-k}.
template <class R>
Series<R> series_log1p(const Series<R>& z) {
  if (!RingTraits<R>::is_zero(z[0])) throw SeriesError("log requires constant term 1");
  int n = z.order();
  Series<R> g(n);
  for (int m = 1; m <= n; ++m) {
    R acc = z[m] * Rat(m);
    for (int k = 1; k < m; ++k) acc -= g[k] * z[m - k] * Rat(k);
    g[m] = acc * rat(1, m);
  }
  return g;
}

template <class R>
Series<R> series_log(const Series<R>& f) {
  if (!(f[0] == RingTraits<R>::one())) throw SeriesError("log requires constant term 1");
  Series<R> z = f;
  z[0] = RingTraits<R>::zero();
  return series_log1p(z);
}

QSeries qs_invert(const QSeries& f);
QSeries qs_exp(const QSeries& f);
QSeries qs_log(const QSeries& f);

// f(g(q)) for g with zero constant term.
QSeries compose(const QSeries& f, const QSeries& g);

// Re-expands F(q) in Q = e^T where q = Q exp(-tau(q)), tau = T - t.
QSeries revert_to_Q(const QSeries& F, const QSeries& tau);

std::string to_string(const QSeries& f);

}  // namespace msp
