#include "msp/log_series.hpp"

#include <algorithm>

namespace msp {

LogSeries::LogSeries(int order, int tcap) : order_(order), tcap_(tcap), parts_(1, QSeries(order)) {
  if (tcap < 0) throw SeriesError("negative t-degree cap");
}

LogSeries::LogSeries(const QSeries& f, int tcap) : order_(f.order()), tcap_(tcap), parts_(1, f) {}

LogSeries LogSeries::t_power(int order, int j, int tcap) {
  LogSeries r(order, tcap);
  r.set_part(j, QSeries::constant(order, Rat(1)));
  return r;
}

int LogSeries::tdeg() const {
  for (int j = static_cast<int>(parts_.size()) - 1; j >= 0; --j)
    if (!parts_[j].is_zero()) return j;
  return -1;
}

QSeries LogSeries::part(int j) const {
  if (j < 0 || j >= static_cast<int>(parts_.size())) return QSeries(order_);
  return parts_[j];
}

void LogSeries::set_part(int j, const QSeries& f) {
  if (j < 0) throw SeriesError("negative t-exponent");
  if (j > tcap_) throw SeriesError("t-degree cap exceeded");
  if (j >= static_cast<int>(parts_.size())) parts_.resize(j + 1, QSeries(order_));
  parts_[j] = f.truncated(std::min(order_, f.order()));
  if (f.order() < order_) {
    order_ = f.order();
    for (auto& p : parts_) p = p.truncated(order_);
  }
}

void LogSeries::add_to_part(int j, const QSeries& f) { set_part(j, part(j) + f); }

QSeries LogSeries::as_q() const {
  if (tdeg() > 0) throw SeriesError("series is not t-free");
  return parts_[0];
}

LogSeries LogSeries::truncated(int n) const {
  LogSeries r(n, tcap_);
  for (int j = 0; j < static_cast<int>(parts_.size()); ++j) r.set_part(j, parts_[j].truncated(n));
  return r;
}

LogSeries& LogSeries::operator+=(const LogSeries& o) {
  int n = std::max(parts_.size(), o.parts_.size());
  for (int j = 0; j < n; ++j) set_part(j, part(j) + o.part(j));
  return *this;
}

LogSeries& LogSeries::operator-=(const LogSeries& o) {
  int n = std::max(parts_.size(), o.parts_.size());
  for (int j = 0; j < n; ++j) set_part(j, part(j) - o.part(j));
  return *this;
}

LogSeries& LogSeries::operator*=(const Rat& s) {
  for (auto& p : parts_) p *= s;
  return *this;
}

LogSeries operator*(const LogSeries& a, const LogSeries& b) {
  LogSeries r(std::min(a.order_, b.order_), std::min(a.tcap_, b.tcap_));
  int da = a.tdeg(), db = b.tdeg();
  for (int i = 0; i <= da; ++i) {
    if (a.parts_[i].is_zero()) continue;
    for (int j = 0; j <= db; ++j) {
      if (b.parts_[j].is_zero()) continue;
      r.add_to_part(i + j, a.parts_[i] * b.parts_[j]);
    }
  }
  return r;
}

bool operator==(const LogSeries& a, const LogSeries& b) { return first_difference(a, b) < 0; }

int first_difference(const LogSeries& a, const LogSeries& b) {
  int n = std::min(a.order(), b.order());
  int m = std::max(a.tdeg(), b.tdeg());
  int bad = -1;
  for (int j = 0; j <= m; ++j) {
    int d = first_difference(a.part(j).truncated(n), b.part(j).truncated(n));
    if (d >= 0 && (bad < 0 || d < bad)) bad = d;
  }
  return bad;
}

LogSeries dt(const LogSeries& f) {
  LogSeries r(f.order(), f.tcap());
  int D = f.tdeg();
  for (int j = 0; j <= D; ++j) {
    QSeries p = f.part(j);
    r.add_to_part(j, dq(p));
    if (j > 0) r.add_to_part(j - 1, p * Rat(j));
  }
  return r;
}

LogSeries dt(const LogSeries& f, int times) {
  LogSeries r = f;
  for (int i = 0; i < times; ++i) r = dt(r);
  return r;
}

LogSeries dt_inv(const LogSeries& f) {
  int D = f.tdeg();
  for (int j = 0; j <= D; ++j)
    if (sgn(f.part(j)[0]) != 0) throw SeriesError("antiderivative does not vanish at -infinity");
  LogSeries r(f.order(), f.tcap());
  // int y^k e^{dy} = e^{dy} sum_i (-1)^i k!/(k-i)! y^{k-i} / d^{i+1}
  for (int k = 0; k <= D; ++k) {
    QSeries p = f.part(k);
    for (int i = 0; i <= k; ++i) {
      QSeries term(f.order());
      Rat fall = Rat(factorial(k)) / Rat(factorial(k - i));
      if (i % 2) fall = -fall;
      for (int d = 1; d <= f.order(); ++d) {
        if (sgn(p[d]) == 0) continue;
        Rat dpow = 1;
        for (int e = 0; e <= i; ++e) dpow *= d;
        term[d] = p[d] * fall / dpow;
      }
      r.add_to_part(k - i, term);
    }
  }
  return r;
}

}  // namespace msp
