#pragma once

#include <array>
#include <vector>

#include "msp/hlaurent.hpp"
#include "msp/qseries.hpp"
#include "msp/tprime.hpp"

namespace msp {

// sum_d q^d sum_{j<=3} t'^j c_{d,j}(hbar).
//
// At q^d the hbar window is [-kappa*d, prec - kappa*d]. Products of windowed
// terms at q^a and q^b land exactly inside the window at q^{a+b}, so the
// whole ring structure is closed without ever losing a retained coefficient.
class BiSeries {
 public:
  using Slice = std::array<std::vector<Rat>, kTPrimeDeg + 1>;

  BiSeries() : BiSeries(0, 0) {}
  BiSeries(int order, int prec, int kappa = 1);

  static BiSeries one(int order, int prec, int kappa = 1);
  // f(q) * hbar^e * t'^j.
  static BiSeries from_q(const QSeries& f, int prec, int e = 0, int j = 0, int kappa = 1);
  static BiSeries from_tq(const TQSeries& f, int prec, int e = 0, int kappa = 1);

  int order() const { return order_; }
  int prec() const { return prec_; }
  int kappa() const { return kappa_; }
  int lo(int d) const { return -kappa_ * d; }
  int hi(int d) const { return prec_ - kappa_ * d; }

  // Zero below the pole bound; TruncationError above the window.
  Rat get(int d, int j, int e) const;
  void set(int d, int j, int e, const Rat& v);
  void add(int d, int j, int e, const Rat& v);

  TPrime<HLaurent> at(int d) const;
  // Stores f as the t'^j coefficient at q^d; f must cover the window.
  void set_laurent(int d, int j, const HLaurent& f);
  void add_laurent(int d, int j, const HLaurent& f);

  // Coefficient of hbar^e as a t'-graded q-series. Only degrees where hbar^e
  // is inside the window are returned, so the order may be below order().
  TQSeries h_coef(int e) const;
  int h_coef_known_order(int e) const;
  TQSeries residue() const { return h_coef(-1); }

  BiSeries tprime_part(int j) const;
  BiSeries truncated(int order) const;
  BiSeries with_prec(int prec) const;
  // Multiply by hbar^k; the window moves with it, so prec becomes prec + k.
  BiSeries shift_h(int k) const;

  // Largest pole order at q^d, or 0 if regular there.
  int pole_order(int d) const;
  bool is_regular() const;
  bool zero_constant_term() const;
  bool is_zero() const;

  BiSeries& operator+=(const BiSeries& o);
  BiSeries& operator-=(const BiSeries& o);
  BiSeries& operator*=(const Rat& s);
  friend BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
  friend BiSeries operator-(BiSeries a, const BiSeries& b) { return a -= b; }
  friend BiSeries operator-(BiSeries a) { return a *= Rat(-1); }
  friend BiSeries operator*(BiSeries a, const Rat& s) { return a *= s; }
  friend BiSeries operator*(const Rat& s, BiSeries a) { return a *= s; }
  friend BiSeries operator*(const BiSeries& a, const BiSeries& b);
  friend BiSeries operator*(const BiSeries& a, const QSeries& f);
  friend BiSeries operator*(const QSeries& f, const BiSeries& a) { return a * f; }

  const Slice& slice(int d) const { return s_[d]; }

 private:
  Slice zero_slice() const;
  void mul_slice_into(const Slice& a, const Slice& b, Slice& out, const Rat& w) const;
  void conform(const BiSeries& o);

  int order_;
  int prec_;
  int kappa_;
  std::vector<Slice> s_;

  friend BiSeries bi_exp(const BiSeries& x);
  friend BiSeries bi_log1p(const BiSeries& z);
  friend BiSeries bi_inv1p(const BiSeries& z);
  friend int first_difference(const BiSeries& a, const BiSeries& b);
};

// exp(x) for x without a q^0 term.
BiSeries bi_exp(const BiSeries& x);
// log(1 + z) for z without a q^0 term.
BiSeries bi_log1p(const BiSeries& z);
// 1/(1 + z) for z without a q^0 term.
BiSeries bi_inv1p(const BiSeries& z);

int first_difference(const BiSeries& a, const BiSeries& b);

}  // namespace msp
