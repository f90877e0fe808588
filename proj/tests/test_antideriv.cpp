#include <doctest.h>

#include "msp/antideriv.hpp"

using namespace msp;

TEST_CASE("first factor kills I0") {
  FactoredPF P = build_factored_pf(8);
  CHECK(apply_D(P, 1, P.I[0]).is_zero());
  // D2 D1 kills I1 as well, since D1 I1 = I0 T'.
  CHECK(apply_D_chain(P, 2, P.I[1]).is_zero());
  CHECK_FALSE(apply_D_chain(P, 1, P.I[1]).is_zero());
}

TEST_CASE("closed-form antiderivatives differentiate back to the integrand") {
  FactoredPF P = build_factored_pf(8);
  LogSeries I0(P.M.I0);
  for (int k = 0; k < 4; ++k) {
    LogSeries G = antiderivative_I0_d4Ik(P, k);
    CHECK(dt(G) == I0 * dt(P.I[k], 4));
    // vanishes at q = 0 in every t-part
    for (int j = 0; j <= G.tdeg(); ++j) CHECK(G.part(j)[0] == 0);
  }
  CHECK_THROWS_AS(antiderivative_I0_d4Ik(P, 4), SeriesError);
  CHECK_THROWS_AS(antiderivative_Jkp_I0_d4I0(P, 3), SeriesError);
}

TEST_CASE("fix_boundary replaces t by T in the q^0 part") {
  FactoredPF P = build_factored_pf(6);
  LogSeries t = LogSeries::t_power(6, 1);
  LogSeries r = fix_boundary(P, t, 1);
  CHECK(r.is_t_free());
  CHECK(r.as_q() == -P.M.T_minus_t);
  CHECK_THROWS_AS(fix_boundary(P, t * t, 1), SeriesError);
  LogSeries q(QSeries::monomial(6, 2, Rat(3)));
  CHECK(fix_boundary(P, q, 0) == q);
}

TEST_CASE("identity reports") {
  for (int order : {2, 6, 10}) {
    CHECK(check_operator_factorization(order).ok());
    CHECK(check_antiderivatives(order).ok());
  }
  CHECK(check_desired_identity(8).ok());
  CHECK_THROWS_AS(check_desired_identity(1), SeriesError);
}

TEST_CASE("type-B identity right side at low order") {
  // T''/(2T') + 2 I0'/I0 + (1/5) ln(1 - alpha); its q^1 coefficient is
  // (1/2)(T'')_1 + 2*120 - 625.
  FactoredPF P = build_factored_pf(4);
  DesiredIdentity di = desired_identity(P);
  QSeries Tpp = dq(P.M.Tp);
  CHECK(di.rhs[0] == 0);
  CHECK(di.rhs[1] == Tpp[1] / 2 + 240 - 625);
  CHECK(di.lhs.as_q() == di.rhs);
}
