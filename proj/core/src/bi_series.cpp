#include "msp/bi_series.hpp"

#include <algorithm>

namespace msp {

BiSeries::BiSeries(int order, int prec, int kappa) : order_(order), prec_(prec), kappa_(kappa) {
  if (order < 0) throw SeriesError("negative truncation order");
  if (prec < 0) throw SeriesError("negative hbar precision");
  if (kappa < 1) throw SeriesError("pole slope must be positive");
  s_.assign(order + 1, zero_slice());
}

BiSeries::Slice BiSeries::zero_slice() const {
  Slice z;
  for (auto& v : z) v.assign(prec_ + 1, Rat(0));
  return z;
}

BiSeries BiSeries::one(int order, int prec, int kappa) {
  BiSeries r(order, prec, kappa);
  r.s_[0][0][0] = 1;
  return r;
}

BiSeries BiSeries::from_q(const QSeries& f, int prec, int e, int j, int kappa) {
  BiSeries r(f.order(), prec, kappa);
  for (int d = 0; d <= f.order(); ++d)
    if (sgn(f[d]) != 0 && e <= r.hi(d)) r.set(d, j, e, f[d]);
  return r;
}

BiSeries BiSeries::from_tq(const TQSeries& f, int prec, int e, int kappa) {
  BiSeries r(f.order(), prec, kappa);
  for (int d = 0; d <= f.order(); ++d)
    for (int j = 0; j <= kTPrimeDeg; ++j)
      if (sgn(f[d][j]) != 0 && e <= r.hi(d)) r.set(d, j, e, f[d][j]);
  return r;
}

Rat BiSeries::get(int d, int j, int e) const {
  if (d < 0 || d > order_) throw TruncationError("q-degree outside truncation");
  if (e < lo(d)) return Rat(0);
  if (e > hi(d)) throw TruncationError("hbar exponent above retained window");
  return s_[d].at(j)[e - lo(d)];
}

void BiSeries::set(int d, int j, int e, const Rat& v) {
  if (d < 0 || d > order_) throw SeriesError("q-degree outside truncation");
  if (e < lo(d)) {
    if (sgn(v) == 0) return;
    throw SeriesError("pole order exceeds the bound at this q-degree");
  }
  if (e > hi(d)) throw SeriesError("hbar exponent above retained window");
  s_[d].at(j)[e - lo(d)] = v;
}

void BiSeries::add(int d, int j, int e, const Rat& v) { set(d, j, e, get(d, j, e) + v); }

TPrime<HLaurent> BiSeries::at(int d) const {
  TPrime<HLaurent> r;
  for (int j = 0; j <= kTPrimeDeg; ++j) {
    HLaurent h(lo(d), hi(d));
    for (int e = lo(d); e <= hi(d); ++e) h.set(e, s_[d][j][e - lo(d)]);
    r[j] = h;
  }
  return r;
}

void BiSeries::set_laurent(int d, int j, const HLaurent& f) {
  for (int e = lo(d); e <= hi(d); ++e) set(d, j, e, f.coef(e));
  if (!f.exact_zero())
    for (int e = f.lo(); e < lo(d); ++e)
      if (sgn(f.coef(e)) != 0) throw SeriesError("pole order exceeds the bound at this q-degree");
}

void BiSeries::add_laurent(int d, int j, const HLaurent& f) {
  if (!f.exact_zero())
    for (int e = f.lo(); e < lo(d); ++e)
      if (sgn(f.coef(e)) != 0) throw SeriesError("pole order exceeds the bound at this q-degree");
  for (int e = lo(d); e <= hi(d); ++e) add(d, j, e, f.coef(e));
}

int BiSeries::h_coef_known_order(int e) const {
  // e <= prec - kappa*d
  int n = e > prec_ ? -1 : (prec_ - e) / kappa_;
  return std::min(order_, n);
}

TQSeries BiSeries::h_coef(int e) const {
  int n = h_coef_known_order(e);
  if (n < 0) throw TruncationError("hbar exponent above retained window");
  TQSeries r(n);
  for (int d = 0; d <= n; ++d)
    for (int j = 0; j <= kTPrimeDeg; ++j) r[d][j] = get(d, j, e);
  return r;
}

BiSeries BiSeries::tprime_part(int j) const {
  BiSeries r(order_, prec_, kappa_);
  for (int d = 0; d <= order_; ++d) r.s_[d][0] = s_[d].at(j);
  return r;
}

BiSeries BiSeries::truncated(int order) const {
  if (order > order_) throw TruncationError("cannot raise truncation order");
  BiSeries r = *this;
  r.order_ = order;
  r.s_.resize(order + 1);
  return r;
}

BiSeries BiSeries::with_prec(int prec) const {
  if (prec > prec_) throw TruncationError("cannot raise hbar precision");
  BiSeries r(order_, prec, kappa_);
  for (int d = 0; d <= order_; ++d)
    for (int j = 0; j <= kTPrimeDeg; ++j)
      for (int i = 0; i <= prec; ++i) r.s_[d][j][i] = s_[d][j][i];
  return r;
}

BiSeries BiSeries::shift_h(int k) const {
  BiSeries r(order_, prec_ + k, kappa_);
  for (int d = 0; d <= order_; ++d)
    for (int j = 0; j <= kTPrimeDeg; ++j)
      for (int e = lo(d); e <= hi(d); ++e) {
        const Rat& v = s_[d][j][e - lo(d)];
        if (sgn(v) != 0) r.set(d, j, e + k, v);
      }
  return r;
}

int BiSeries::pole_order(int d) const {
  int p = 0;
  for (int j = 0; j <= kTPrimeDeg; ++j)
    for (int e = lo(d); e < 0 && e <= hi(d); ++e)
      if (sgn(s_[d][j][e - lo(d)]) != 0) p = std::max(p, -e);
  return p;
}

bool BiSeries::is_regular() const {
  for (int d = 0; d <= order_; ++d)
    if (pole_order(d) > 0) return false;
  return true;
}

bool BiSeries::zero_constant_term() const {
  for (const auto& v : s_[0])
    for (const auto& x : v)
      if (sgn(x) != 0) return false;
  return true;
}

bool BiSeries::is_zero() const {
  for (const auto& sl : s_)
    for (const auto& v : sl)
      for (const auto& x : v)
        if (sgn(x) != 0) return false;
  return true;
}

void BiSeries::conform(const BiSeries& o) {
  if (o.kappa_ != kappa_) throw SeriesError("mismatched pole slopes");
  if (o.order_ < order_) *this = truncated(o.order_);
  if (o.prec_ < prec_) *this = with_prec(o.prec_);
}

BiSeries& BiSeries::operator+=(const BiSeries& o) {
  conform(o);
  for (int d = 0; d <= order_; ++d)
    for (int j = 0; j <= kTPrimeDeg; ++j)
      for (int i = 0; i <= prec_; ++i) s_[d][j][i] += o.s_[d][j][i];
  return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& o) {
  conform(o);
  for (int d = 0; d <= order_; ++d)
    for (int j = 0; j <= kTPrimeDeg; ++j)
      for (int i = 0; i <= prec_; ++i) s_[d][j][i] -= o.s_[d][j][i];
  return *this;
}

BiSeries& BiSeries::operator*=(const Rat& s) {
  for (auto& sl : s_)
    for (auto& v : sl)
      for (auto& x : v) x *= s;
  return *this;
}

// out += w * a * b, slices at degrees summing to out's degree.
// Window indices add: (i1 - k d1) + (i2 - k d2) = (i1 + i2) - k (d1 + d2).
void BiSeries::mul_slice_into(const Slice& a, const Slice& b, Slice& out, const Rat& w) const {
  Rat t;
  for (int j1 = 0; j1 <= kTPrimeDeg; ++j1)
    for (int i1 = 0; i1 <= prec_; ++i1) {
      const Rat& x = a[j1][i1];
      if (sgn(x) == 0) continue;
      t = x * w;
      for (int j2 = 0; j1 + j2 <= kTPrimeDeg; ++j2)
        for (int i2 = 0; i1 + i2 <= prec_; ++i2) {
          const Rat& y = b[j2][i2];
          if (sgn(y) == 0) continue;
          out[j1 + j2][i1 + i2] += t * y;
        }
    }
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
  if (a.kappa_ != b.kappa_) throw SeriesError("mismatched pole slopes");
  BiSeries x = a, y = b;
  x.conform(b);
  y.conform(a);
  BiSeries r(x.order_, x.prec_, x.kappa_);
  Rat one(1);
  for (int d1 = 0; d1 <= r.order_; ++d1)
    for (int d2 = 0; d1 + d2 <= r.order_; ++d2) r.mul_slice_into(x.s_[d1], y.s_[d2], r.s_[d1 + d2], one);
  return r;
}

BiSeries operator*(const BiSeries& a, const QSeries& f) {
  return a * BiSeries::from_q(f.truncated(std::min(f.order(), a.order_)), a.prec_, 0, 0, a.kappa_);
}

BiSeries bi_exp(const BiSeries& x) {
  if (!x.zero_constant_term()) throw SeriesError("exp requires zero q^0 term");
  int n = x.order_;
  BiSeries e = BiSeries::one(n, x.prec_, x.kappa_);
  for (int m = 1; m <= n; ++m) {
    BiSeries::Slice acc = e.zero_slice();
    for (int k = 1; k <= m; ++k) e.mul_slice_into(x.s_[k], e.s_[m - k], acc, rat(k, m));
    e.s_[m] = std::move(acc);
  }
  return e;
}

BiSeries bi_log1p(const BiSeries& z) {
  if (!z.zero_constant_term()) throw SeriesError("log requires constant term 1");
  int n = z.order_;
  BiSeries g(n, z.prec_, z.kappa_);
  for (int m = 1; m <= n; ++m) {
    BiSeries::Slice acc = z.s_[m];
    for (int k = 1; k < m; ++k) g.mul_slice_into(g.s_[k], z.s_[m - k], acc, rat(-k, m));
    g.s_[m] = std::move(acc);
  }
  return g;
}

BiSeries bi_inv1p(const BiSeries& z) {
  if (!z.zero_constant_term()) throw SeriesError("inverse requires constant term 1");
  int n = z.order_;
  BiSeries r = BiSeries::one(n, z.prec_, z.kappa_);
  for (int m = 1; m <= n; ++m) {
    BiSeries::Slice acc = r.zero_slice();
    for (int k = 1; k <= m; ++k) r.mul_slice_into(z.s_[k], r.s_[m - k], acc, Rat(-1));
    r.s_[m] = std::move(acc);
  }
  return r;
}

int first_difference(const BiSeries& a, const BiSeries& b) {
  if (a.kappa_ != b.kappa_) throw SeriesError("mismatched pole slopes");
  int n = std::min(a.order_, b.order_);
  int p = std::min(a.prec_, b.prec_);
  for (int d = 0; d <= n; ++d)
    for (int j = 0; j <= kTPrimeDeg; ++j)
      for (int i = 0; i <= p; ++i)
        if (a.s_[d][j][i] != b.s_[d][j][i]) return d;
  return -1;
}

}  // namespace msp
