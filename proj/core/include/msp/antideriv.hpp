#pragma once

#include <array>

#include "msp/picard_fuchs.hpp"

namespace msp {

// L = D4 D3 D2 D1 with D_k = d + c_k, and beta = 1 - alpha.
struct FactoredPF {
  int order = 0;
  IFunctions I;
  MirrorData M;
  Generators G;
  std::array<QSeries, 4> c;  // c[k] = c_{k+1}
  QSeries beta;
};

FactoredPF build_factored_pf(int order);

// (d + c_k) f for k in 1..4.
LogSeries apply_D(const FactoredPF& P, int k, const LogSeries& f);
// D_n ... D_1 f
LogSeries apply_D_chain(const FactoredPF& P, int n, const LogSeries& f);

Report check_operator_factorization(int order);

// int I0 d^4 I_k = (I0 beta) D3 D2 D1 d I_k, constant fixed by vanishing at -infinity.
LogSeries antiderivative_I0_d4Ik(const FactoredPF& P, int k);
// int T' int I0 d^4 I_k = (I0 beta T') D2 D1 d I_k + C T + D, same boundary condition.
LogSeries antiderivative_Tp_I0_d4Ik(const FactoredPF& P, int k);
// int J_k' int I0 I0'''' for k in {1, 2}.
LogSeries antiderivative_Jkp_I0_d4I0(const FactoredPF& P, int k);

enum class PairKind { I0I0, I1I0, I1I1 };
LogSeries antiderivative_pair(const FactoredPF& P, PairKind which);
// int I1'' I0'' through int I1 I0'''' = int T I0 I0''''.
LogSeries antiderivative_I1I0_by_parts(const FactoredPF& P);

// Removes the q^0 part p(t) of f as p(T), i.e. fixes constants of integration
// that may multiply powers of T. Throws if the q^0 part has t-degree > max_tdeg.
LogSeries fix_boundary(const FactoredPF& P, const LogSeries& f, int max_tdeg);

Report check_antiderivatives(int order);

struct DesiredIdentity {
  LogSeries lhs;
  QSeries rhs;
};

DesiredIdentity desired_identity(const FactoredPF& P);
Report check_desired_identity(int order);

}  // namespace msp
