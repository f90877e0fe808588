#pragma once

#include <vector>

#include "msp/qseries.hpp"

namespace msp {

inline constexpr int kDefaultTCap = 8;

// sum_j t^j f_j(q) with q = e^t, so that d/dt acts on both t and q.
class LogSeries {
 public:
  LogSeries() : LogSeries(0) {}
  explicit LogSeries(int order, int tcap = kDefaultTCap);
  LogSeries(const QSeries& f, int tcap = kDefaultTCap);  // NOLINT: implicit lift is intended

  static LogSeries t_power(int order, int j, int tcap = kDefaultTCap);

  int order() const { return order_; }
  int tcap() const { return tcap_; }
  // Highest j with a nonzero part, or -1 for zero.
  int tdeg() const;
  QSeries part(int j) const;
  void set_part(int j, const QSeries& f);
  void add_to_part(int j, const QSeries& f);

  bool is_zero() const { return tdeg() < 0; }
  bool is_t_free() const { return tdeg() <= 0; }
  // The q-series of a t-free LogSeries; throws if any t^j (j >= 1) part survives.
  QSeries as_q() const;

  LogSeries truncated(int n) const;

  LogSeries& operator+=(const LogSeries& o);
  LogSeries& operator-=(const LogSeries& o);
  LogSeries& operator*=(const Rat& s);

  friend LogSeries operator+(LogSeries a, const LogSeries& b) { return a += b; }
  friend LogSeries operator-(LogSeries a, const LogSeries& b) { return a -= b; }
  friend LogSeries operator-(LogSeries a) { return a *= Rat(-1); }
  friend LogSeries operator*(LogSeries a, const Rat& s) { return a *= s; }
  friend LogSeries operator*(const Rat& s, LogSeries a) { return a *= s; }
  friend LogSeries operator*(const LogSeries& a, const LogSeries& b);
  friend bool operator==(const LogSeries& a, const LogSeries& b);

 private:
  int order_;
  int tcap_;
  std::vector<QSeries> parts_;
};

LogSeries dt(const LogSeries& f);
LogSeries dt(const LogSeries& f, int times);
// Antiderivative vanishing at t -> -infinity.
LogSeries dt_inv(const LogSeries& f);

// Lowest q-degree at which a and b differ in some t-part, or -1.
int first_difference(const LogSeries& a, const LogSeries& b);

}  // namespace msp
