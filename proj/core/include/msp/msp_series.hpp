#pragma once

#include <vector>

#include "msp/bi_series.hpp"
#include "msp/ifun.hpp"
#include "msp/report.hpp"

namespace msp {

// Shared q-series data for the packaged generating series. All series below
// use the ℏ-window [-d, prec - d] at q^d unless stated otherwise.
struct MspContext {
  int order = 0;
  int prec = 0;
  IFunctions I;
  MirrorData M;
  QSeries inv_I0;
  QSeries tau;       // T - t
  QSeries g1_over_I0;
  std::vector<Rat> a;  // a[d] = (5d)!/(d!)^5
};

// prec < 0 selects order + 4.
MspContext build_msp_context(int order, int prec = -1);

// Sum_d q^d prod_{k<=5d}(5w+k)/prod_{k<=d}(w+k)^5 at w = -1/ℏ.
BiSeries script_R(const MspContext& ctx);
// (1/I_0) e^{(t-T)w} R = (1/I_0) e^{τ/ℏ} R.
BiSeries lambda_series(const MspContext& ctx);

BiSeries tilde_z15(const MspContext& ctx);
// t'^0 part of tilde_z15.
BiSeries z15(const MspContext& ctx);
// tilde_z15 / 5.
BiSeries z6_star(const MspContext& ctx);

// Closed forms of B_0, B_1, B_2.
BiSeries b_series(const MspContext& ctx, int k);
// Genus-zero correction term of Z_{0,k}; zero for k <= 2. Built with pole
// slope 3 since the k = 4 term has ℏ^{-3} already at q^1.
BiSeries frak_n(const MspContext& ctx, int k);
// Z_{0,k} = B_k + 5(-1)^k (1 - Λ) for k in {0, 1, 2}.
BiSeries z0k(const MspContext& ctx, int k);
// K_{c,k} = Res_{ℏ=0} Z_{0,k}/ℏ^{c-1}.
QSeries k_series(const MspContext& ctx, int c, int k);

// Z~_{0,1}(t, -t).
BiSeries ghost_z01(const MspContext& ctx);

struct RegularizingPair {
  TQSeries eta;
  BiSeries zbar;
};

// 1 + Z = e^{η/ℏ}(1 + Zbar) with Zbar regular at ℏ = 0.
RegularizingPair regularize(const BiSeries& Z);
// Inverse of regularize: e^{η/ℏ}(1 + Zbar) - 1.
BiSeries from_pair(const RegularizingPair& p);

Report check_msp_series(int order);
Report check_god(int order);
Report check_eta_coefficients(int order);
Report check_regularization(int order);

}  // namespace msp
