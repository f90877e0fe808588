#include <doctest.h>

#include "msp/ifun.hpp"
#include "oracles.hpp"

using namespace msp;

TEST_CASE("hypergeometric coefficients against factorials") {
  for (int d = 0; d <= 8; ++d) CHECK(a_cubic(d)[0] == oracle::a0(d));
  CHECK(a_cubic(1)[0] == 120);
  CHECK(a_cubic(2)[0] == 113400);
}

TEST_CASE("Frobenius pieces against the logarithmic expansion") {
  IFunctions I = build_ifunctions(8);
  for (int d = 1; d <= 8; ++d) {
    auto ref = oracle::frobenius(d);
    for (int k = 0; k < 4; ++k) CHECK(I.F[k][d] == ref[k]);
  }
  // I_k = sum_i t^i/i! F_{k-i}
  CHECK(I[2].part(2) == I.F[0] * rat(1, 2));
  CHECK(I[3].part(1) == I.F[2]);
  CHECK(I[0].is_t_free());
}

TEST_CASE("g1 and g5 are harmonic-weighted") {
  IFunctions I = build_ifunctions(6);
  for (int d = 1; d <= 6; ++d) {
    Rat h1 = 0, h5 = 0;
    for (int k = 1; k <= d; ++k) h1 += oracle::frac(1, k);
    for (int k = 1; k <= 5 * d; ++k) h5 += oracle::frac(1, k);
    CHECK(I.g1[d] == oracle::a0(d) * h1);
    CHECK(I.g5[d] == oracle::a0(d) * h5);
    // F_1 = 5 a_d (H_{5d} - H_d)
    CHECK(I.F[1][d] == 5 * oracle::a0(d) * (h5 - h1));
  }
}

TEST_CASE("cubic arithmetic") {
  Cubic a{Rat(2), Rat(1), rat(1, 3), Rat(-4)};
  Cubic one = cubic_mul(a, cubic_inv(a));
  CHECK(one == Cubic{Rat(1), Rat(0), Rat(0), Rat(0)});
  CHECK_THROWS_AS(cubic_inv(Cubic{Rat(0), Rat(1), Rat(0), Rat(0)}), SeriesError);
  CHECK_THROWS_AS(b_cubic(0), SeriesError);
}

TEST_CASE("mirror map") {
  MirrorData M = build_mirror(build_ifunctions(6));
  // tau = F_1/F_0 by naive inversion
  oracle::Vec f0(7), f1(7);
  for (int d = 0; d <= 6; ++d) {
    f0[d] = d == 0 ? Rat(1) : oracle::frobenius(d)[0];
    f1[d] = d == 0 ? Rat(0) : oracle::frobenius(d)[1];
  }
  oracle::Vec inv(7, Rat(0));
  inv[0] = 1;
  for (int n = 1; n <= 6; ++n) {
    Rat acc = 0;
    for (int k = 1; k <= n; ++k) acc += f0[k] * inv[n - k];
    inv[n] = -acc;
  }
  CHECK(M.T_minus_t.coeffs() == oracle::mul(f1, inv));
  CHECK(M.T_minus_t[1] == 770);
  CHECK(M.I0[1] == 120);
}

TEST_CASE("genus-zero invariants") {
  MirrorData M = build_mirror(build_ifunctions(8));
  std::vector<Rat> n0 = genus0_invariants(M, 4);
  CHECK(n0[0] == 2875);
  CHECK(n0[1] == rat(4876875, 8));
  CHECK(n0[2] == rat(8564575000L, 27));
  CHECK(n0[3] == rat(15517926796875L, 64));
  for (int d = 1; d <= 4; ++d) CHECK(n0[d - 1] == oracle::genus0_from_bps(d));
  CHECK_THROWS_AS(genus0_invariants(M, 9), TruncationError);
}

TEST_CASE("Yukawa coupling in the flat coordinate") {
  // F_TTT = 1 + (1/5) sum_d d^3 N_{0,d} Q^d
  MirrorData M = build_mirror(build_ifunctions(6));
  QSeries y = revert_to_Q(M.FTTT, M.T_minus_t);
  CHECK(y[0] == 1);
  for (int d = 1; d <= 4; ++d) CHECK(y[d] == Rat(d * d * d) * oracle::genus0_from_bps(d) / 5);
}

TEST_CASE("identity reports") {
  for (int order : {1, 6, 12}) {
    CHECK(check_msp_to_givental(order).ok());
    CHECK(check_special_geometry(order).ok());
  }
}

TEST_CASE("sign-rule coefficients agree with the direct expansion of B_d") {
  for (int d = 1; d <= 6; ++d) {
    AdBd ab = ad_bd_coefficients(d);
    Cubic B = b_cubic(d);
    for (int i = 0; i < 4; ++i) CHECK(ab.b[i] == B[i]);
  }
  AdBd one = ad_bd_coefficients(1);
  CHECK(one.b[0] == -120);
  CHECK(one.b[1] == 770);
}
