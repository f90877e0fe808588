#pragma once

#include <vector>

#include "msp/msp_series.hpp"

namespace msp {

// T_{j,m} = S_{j,m-2}, as series in Q = e^T. Three independent evaluations:
// directly from B_d(h) with ψ = (h+1)/d, from the sign-rule coefficients b_i(d),
// and from derivatives of the I-functions (m >= 1 only).
QSeries t_series_direct(int j, int m, int order);
QSeries t_series_signrule(int j, int m, int order);
QSeries t_series_ifun(const IFunctions& I, int j, int m);
// S_{j,m}; zero for j < 0.
QSeries s_series(int j, int m, int order);
Report check_s_series(int order);

// Type A total minus F_1'.
QSeries contrib_A_remainder(const MspContext& ctx);
// Same, from K_{2,1}, K_{1,2} and the ghost regularizing pair.
QSeries contrib_A_from_k(const MspContext& ctx);
QSeries contrib_B(const MspContext& ctx);
// Cont^+ + Cont^0 from the I-function integrals; needs order >= 2.
QSeries contrib_B_from_ifun(int order);
QSeries contrib_C(const MspContext& ctx);
QSeries contrib_C_from_eta(const MspContext& ctx);
QSeries contrib_D(const MspContext& ctx);
// -(128/3) Coe_{t'} ln(1 + Z6*(5)) - (125/3) Coe_{t'^2} ln(1 + Z6*(5)).
QSeries contrib_D_at_5(const MspContext& ctx);

// 1 + Z6* evaluated at a nonzero rational ℏ, summed degree by degree.
TQSeries one_plus_z6_star_at(const MspContext& ctx, const Rat& hbar);

// (25/12)(T-t) - (31/3) ln I_0 - (1/2) ln T' - (1/12) ln(1 - α)
QSeries f1_closed(const MspContext& ctx);

struct ContributionSet {
  int order = 0;
  QSeries A_remainder, B, C, D;
  QSeries F1_prime;
  QSeries F1;
  std::vector<Rat> N1;  // N1[d-1] = N_{1,d}
};

// Closed-form contributions and F_1 solved from their sum.
ContributionSet assemble(const MspContext& ctx);
ContributionSet assemble(int order);

std::vector<Rat> genus1_invariants(int order, int dmax);

Report check_contributions(int order);
Report check_assembly(int order);

}  // namespace msp
