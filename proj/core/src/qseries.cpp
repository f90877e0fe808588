#include "msp/qseries.hpp"

#include <sstream>

namespace msp {

QSeries qs_invert(const QSeries& f) {
  if (sgn(f[0]) == 0) throw SeriesError("not invertible");
  int n = f.order();
  QSeries r(n);
  Rat inv0 = 1 / f[0];
  r[0] = inv0;
  for (int m = 1; m <= n; ++m) {
    Rat acc = 0;
    for (int k = 1; k <= m; ++k) acc += f[k] * r[m - k];
    r[m] = -acc * inv0;
  }
  return r;
}

QSeries qs_exp(const QSeries& f) { return series_exp(f); }
QSeries qs_log(const QSeries& f) { return series_log(f); }

QSeries compose(const QSeries& f, const QSeries& g) {
  if (sgn(g[0]) != 0) throw SeriesError("inner series must have zero constant term");
  int n = std::min(f.order(), g.order());
  QSeries r(n);
  for (int d = n; d >= 0; --d) {
    r = r * g;
    r[0] += f[d];
  }
  return r;
}

QSeries revert_to_Q(const QSeries& F, const QSeries& tau) {
  if (sgn(tau[0]) != 0) throw SeriesError("T - t must have zero constant term");
  int n = std::min(F.order(), tau.order());
  QSeries Q = QSeries::monomial(n, 1, Rat(1));
  // q(Q) = Q exp(-tau(q(Q))); each pass fixes one more coefficient.
  QSeries q = Q;
  for (int it = 0; it < n; ++it) q = Q * qs_exp(-compose(tau.truncated(n), q));
  return compose(F.truncated(n), q);
}

std::string to_string(const QSeries& f) {
  std::ostringstream os;
  bool first = true;
  for (int d = 0; d <= f.order(); ++d) {
    if (sgn(f[d]) == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << f[d].get_str() << ")";
    if (d > 0) os << "*q^" << d;
  }
  if (first) os << "0";
  os << " + O(q^" << f.order() + 1 << ")";
  return os.str();
}

}  // namespace msp
