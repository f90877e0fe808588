#include <doctest.h>

#include "msp/msp_series.hpp"
#include "oracles.hpp"

using namespace msp;

namespace {

Rat binom(int n, int k) { return Rat(oracle::fact(n)) / Rat(oracle::fact(k) * oracle::fact(n - k)); }

}  // namespace

TEST_CASE("R at q^1 against a direct expansion") {
  // prod_{k<=5}(-5 + k h) * (-1)(1 - h)^{-5}
  MspContext ctx = build_msp_context(2, 6);
  BiSeries R = script_R(ctx);
  std::vector<Rat> num{Rat(1)};
  for (int k = 1; k <= 5; ++k) {
    std::vector<Rat> n(num.size() + 1, Rat(0));
    for (size_t i = 0; i < num.size(); ++i) {
      n[i] += num[i] * -5;
      n[i + 1] += num[i] * k;
    }
    num = n;
  }
  for (int e = 0; e <= R.hi(1); ++e) {
    Rat c = 0;
    for (int i = 0; i <= e && i < static_cast<int>(num.size()); ++i) c -= num[i] * binom(e - i + 4, 4);
    CHECK(R.get(1, 0, e) == c);
  }
  CHECK(R.get(1, 0, 0) == 3125);
  CHECK(R.get(0, 0, 0) == 1);
  CHECK(R.is_regular());
}

TEST_CASE("spot values at q^1") {
  MspContext ctx = build_msp_context(3);
  CHECK(k_series(ctx, 1, 2)[1] == 3850);
  CHECK(k_series(ctx, 2, 1)[1] == 600);
  CHECK(b_series(ctx, 1).get(1, 0, 0) == -14425);
  RegularizingPair p = regularize(z6_star(ctx));
  CHECK(p.eta[1][0] == 770);
  CHECK(p.eta[1][1] == 3005);
  CHECK(p.eta[1][2] == 0);
  RegularizingPair g = regularize(ghost_z01(ctx) * rat(1, 5));
  CHECK(g.eta[1][0] == 120);
  CHECK(frak_n(ctx, 3).get(1, 0, -2) == -2875);
  CHECK(frak_n(ctx, 4).get(1, 0, -3) == 2 * 2875);
}

TEST_CASE("K-series identities against the mirror map") {
  for (int order : {1, 4, 8}) {
    MspContext ctx = build_msp_context(order);
    CHECK(k_series(ctx, 1, 2) == dq(ctx.tau) * Rat(5));
    CHECK(k_series(ctx, 2, 1) == dq(ctx.M.I0) * ctx.inv_I0 * Rat(5));
  }
}

TEST_CASE("window independence") {
  MspContext a = build_msp_context(5), b = build_msp_context(5, 12);
  CHECK(k_series(a, 1, 2) == k_series(b, 1, 2));
  CHECK(k_series(a, 2, 1) == k_series(b, 2, 1));
  RegularizingPair pa = regularize(z6_star(a)), pb = regularize(z6_star(b));
  CHECK(pa.eta == pb.eta);
  CHECK(pa.zbar.h_coef(0) == pb.zbar.h_coef(0));
}

TEST_CASE("argument validation") {
  MspContext ctx = build_msp_context(2);
  CHECK_THROWS_AS(z0k(ctx, 3), SeriesError);
  CHECK_THROWS_AS(z0k(ctx, 4), SeriesError);
  CHECK_THROWS_AS(b_series(ctx, 3), SeriesError);
  CHECK_THROWS_AS(frak_n(ctx, 5), SeriesError);
  CHECK_THROWS_AS(k_series(ctx, 0, 1), SeriesError);
  CHECK_THROWS_AS(build_msp_context(0), SeriesError);
}

TEST_CASE("regularization of zero and of a double pole") {
  BiSeries zero(4, 5);
  RegularizingPair p = regularize(zero);
  CHECK(coe_tprime(p.eta, 0).is_zero());
  CHECK(p.zbar.is_zero());
  BiSeries bad(3, 8, 2);
  bad.set(1, 0, -2, Rat(1));
  CHECK_THROWS_AS(regularize(bad), SeriesError);
  BiSeries with_const = BiSeries::one(3, 4);
  CHECK_THROWS_AS(regularize(with_const), SeriesError);
}

TEST_CASE("regularize inverts from_pair on random data") {
  oracle::Gen g(8128);
  for (int trial = 0; trial < 12; ++trial) {
    int order = g.integer(1, 4), prec = order + 2;
    RegularizingPair in;
    in.eta = TQSeries(order);
    for (int d = 1; d <= order; ++d)
      for (int j = 0; j <= 1; ++j) in.eta[d][j] = g.rational(5);
    in.zbar = BiSeries(order, prec);
    for (int d = 1; d <= order; ++d)
      for (int j = 0; j <= 1; ++j)
        for (int e = 0; e <= in.zbar.hi(d); ++e) in.zbar.set(d, j, e, g.rational(5));
    BiSeries Z = from_pair(in);
    RegularizingPair out = regularize(Z);
    CHECK(out.eta == in.eta);
    CHECK(first_difference(out.zbar, in.zbar) == -1);
  }
}

TEST_CASE("Z15 is the t'-free part and equals 5 Lambda - 5") {
  MspContext ctx = build_msp_context(4);
  BiSeries one = BiSeries::one(4, ctx.prec);
  CHECK(first_difference(z15(ctx), (lambda_series(ctx) - one) * Rat(5)) == -1);
  CHECK(first_difference(z0k(ctx, 0), BiSeries(4, ctx.prec)) == -1);
}

TEST_CASE("identity reports") {
  for (int order : {1, 5, 10}) {
    CHECK(check_msp_series(order).ok());
    CHECK(check_eta_coefficients(order).ok());
    CHECK(check_regularization(order).ok());
  }
}
