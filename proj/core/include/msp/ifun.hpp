#pragma once

#include <array>
#include <vector>

#include "msp/log_series.hpp"
#include "msp/report.hpp"

namespace msp {

using Cubic = std::array<Rat, 4>;  // element of Q[h]/(h^4)

Cubic cubic_mul(const Cubic& a, const Cubic& b);
Cubic cubic_inv(const Cubic& a);

// A_d(h) = prod_{k=1}^{5d}(5h+k) / prod_{k=1}^{d}(h+k)^5 mod h^4.
Cubic a_cubic(int d);
// B_d(h) at t = 1, expanded directly from its defining product.
Cubic b_cubic(int d);

struct AdBd {
  Cubic a;
  Cubic b;
};
AdBd ad_bd_coefficients(int d);

struct IFunctions {
  int order = 0;
  std::array<LogSeries, 4> I;
  // Frobenius pieces: I_k = sum_i t^i/i! F_{k-i}.
  std::array<QSeries, 4> F;
  QSeries g1, g5;

  const LogSeries& operator[](int k) const { return I.at(k); }
};

IFunctions build_ifunctions(int order);

struct MirrorData {
  int order = 0;
  QSeries I0;
  QSeries T_minus_t;
  QSeries Tp;
  LogSeries T;
  std::array<LogSeries, 4> J;  // J_k = I_k / I_0, J_0 = 1
  LogSeries FT, FTT;
  QSeries FTTT;
  // Prepotential instanton-free part: dT^{-1} J_2 = (T J_2 - J_3)/2.
  LogSeries F;
  QSeries g1, g5;
};

MirrorData build_mirror(const IFunctions& I);

// d/dT = (1/T') d/dt
LogSeries d_T(const MirrorData& M, const LogSeries& f);

std::vector<Rat> genus0_invariants(const MirrorData& M, int dmax);

Report check_msp_to_givental(int order);
// d_T J_3 + J_2 = T d_T J_2 and (1 - alpha) I_0^2 T'^3 F_TTT = 1.
Report check_special_geometry(int order);

}  // namespace msp
