#pragma once

#include <vector>

#include "msp/bi_series.hpp"
#include "msp/report.hpp"

namespace msp {

// <tau_{k_1} ... tau_{k_n}>_1 on M_{1,n}.
Rat psi_genus1(std::vector<int> k);

// int_{M_{1,k}} lambda_1 psi^i = (k-1)!/prod i_j! / 24 when sum i_j = k - 1.
Rat lambda_psi_genus1(const std::vector<int>& i);

// Lambda_b(r) = sum_{beta, |beta| = b, beta <= r} <psi^beta>_{1,b} prod r!/(r - beta)!
Rat lambda_b(int b, const std::vector<int>& r);

// Left side of the formula1 identity: sum over m and compositions of
// m - 1 - a of prod (-1)^{a_l}/a_l! Res(hbar^{-a_l} Z).
TQSeries formula1_lhs(const BiSeries& Z, int a);
Report check_formula1(const BiSeries& Z, int a, int order);

// X = sum_m 1/m! sum_{a in N^m} <psi^a>_1 prod (-1)^{a_l} Res(hbar^{-a_l} Z).
TQSeries lemmX_lhs(const BiSeries& Z);
Report check_lemmX(int order);

Report check_hodge_numbers();

}  // namespace msp
