#pragma once

#include <array>

#include "msp/ifun.hpp"
#include "msp/rat_func.hpp"
#include "msp/report.hpp"

namespace msp {

// Normalized operator d^4 + a3 d^3 + a2 d^2 + a1 d + a0 with a_k = -sigma_{4-k} C.
struct PFOperator {
  std::array<RatFunc, 4> a;      // a[k] = a_k
  std::array<Rat, 4> sigma;      // sigma[i] = sigma_{i+1}
};

PFOperator pf_operator();
RatFunc rf_alpha();
RatFunc rf_C();     // alpha/(1 - alpha)
RatFunc rf_beta();  // 1 - alpha

// (1 - alpha) d^4 f - alpha sum_k sigma_{4-k} d^k f
LogSeries pf_apply(const LogSeries& f);

struct Generators {
  QSeries A;  // d log T'
  QSeries B;  // d log I0
  QSeries C;  // alpha/(1 - alpha)
  QSeries Y;  // d log F_TTT
};

Generators build_generators(const MirrorData& M);

struct CkBk {
  std::array<QSeries, 4> c;  // c[k] = c_{k+1}
  std::array<QSeries, 4> b;  // b[k] = b_k
};

CkBk ck_bk(const Generators& G, const MirrorData& M);

// Coefficients of (d + c4)(d + c3)(d + c2)(d + c1) by direct operator composition.
std::array<QSeries, 5> compose_first_order(const std::array<QSeries, 4>& c);

Report check_picard_fuchs(int order);
Report check_b_relations(int order);

struct WronskianSet {
  std::array<LogSeries, 6> u;  // u[i] = u_{i+1}
};

// u1 = |I_a, I_b'|, u2 = |I, I''|, u3 = |I, I'''|, u4 = |I', I''|, u5 = |I', I'''|, u6 = |I'', I'''|
WronskianSet wronskians(const IFunctions& I, int a, int b);

Report check_wronskian_identities(int order);

}  // namespace msp
