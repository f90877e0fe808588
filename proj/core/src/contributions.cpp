#include "msp/contributions.hpp"

#include <string>

#include "msp/antideriv.hpp"

namespace msp {

namespace {

Rat int_pow(int base, int e) {
  Rat r = 1;
  for (int i = 0; i < (e < 0 ? -e : e); ++i) r *= base;
  return e < 0 ? 1 / r : r;
}

QSeries alpha_series(int order) { return QSeries::monomial(order, 1, Rat(kAlphaScale)); }
QSeries beta_series(int order) { return QSeries::constant(order, Rat(1)) - alpha_series(order); }

std::string ij(int j, int m) { return std::to_string(j) + "," + std::to_string(m); }

}  // namespace

QSeries t_series_direct(int j, int m, int order) {
  QSeries r(order);
  if (j < 0) return r;
  if (j > 3) throw SeriesError("j must be at most 3");
  // (1+h)^{-m} mod h^4
  Cubic inv_psi;
  for (int i = 0; i < 4; ++i) inv_psi[i] = binomial(Rat(-m), i);
  for (int d = 1; d <= order; ++d) {
    // The edge integral of h^{3-j} ψ^{-m} B_d(h) is -(1/d)[h^j] d^m (1+h)^{-m} B_d(h).
    Cubic f = cubic_mul(b_cubic(d), inv_psi);
    Rat sign = d % 2 ? Rat(-1) : Rat(1);
    r[d] = -sign * int_pow(d, m - 1) * f[j];
  }
  return r;
}

QSeries t_series_signrule(int j, int m, int order) {
  QSeries r(order);
  if (j < 0) return r;
  if (j > 3) throw SeriesError("j must be at most 3");
  Rat M(m);
  Rat w[4] = {Rat(-1), M, -(M + 1) * M / 2, (M + 2) * (M + 1) * M / 6};
  for (int d = 1; d <= order; ++d) {
    AdBd ab = ad_bd_coefficients(d);
    Rat acc = 0;
    for (int i = 0; i <= j; ++i) acc += w[i] * ab.b[j - i];
    Rat sign = d % 2 ? Rat(-1) : Rat(1);
    r[d] = sign * int_pow(d, m - 1) * acc;
  }
  return r;
}

QSeries t_series_ifun(const IFunctions& I, int j, int m) {
  if (m < 1) throw SeriesError("the I-function form needs m >= 1");
  if (j < 0) return QSeries(I.order);
  if (j > 3) throw SeriesError("j must be at most 3");
  int n = m + j - 1;
  LogSeries t = LogSeries::t_power(I.order, 1);
  LogSeries acc(I.order);
  LogSeries tk = LogSeries::t_power(I.order, 0);
  Rat fact = 1;
  for (int k = 0; k <= j; ++k) {
    if (k > 0) {
      tk = tk * t;
      fact *= k;
    }
    Rat w = (k % 2 ? Rat(-1) : Rat(1)) / fact;
    acc += tk * dt(I[j - k], n) * w;
  }
  acc *= j % 2 ? Rat(1) : Rat(-1);
  // t -> T and q -> Q: the combination is t-free, so only the q-series survives.
  QSeries r = acc.as_q();
  if (m == 1) r[0] += (j % 2 ? Rat(-1) : Rat(1)) * binomial(Rat(n), j);
  return r;
}

QSeries s_series(int j, int m, int order) { return t_series_direct(j, m + 2, order); }

Report check_s_series(int order) {
  Report rep;
  rep.suite = "sseries";
  IFunctions I = build_ifunctions(order + 1);
  bool ok_sign = true, ok_ifun = true;
  std::string bad_sign, bad_ifun;
  for (int j = 0; j <= 3; ++j)
    for (int m = -1; m <= 3; ++m) {
      QSeries s = s_series(j, m, order);
      if (!(s == t_series_signrule(j, m + 2, order))) {
        ok_sign = false;
        bad_sign = "S_" + ij(j, m);
      }
      if (!(s == t_series_ifun(I, j, m + 2).truncated(order))) {
        ok_ifun = false;
        bad_ifun = "S_" + ij(j, m);
      }
    }
  rep.add(expect_true("S_{j,m}: direct sum = sign-rule sum, j <= 3, -1 <= m <= 3", ok_sign, bad_sign));
  rep.add(expect_true("S_{j,m}: direct sum = I-function form, j <= 3, -1 <= m <= 3", ok_ifun, bad_ifun));

  bool ok_rec = true;
  std::string bad_rec;
  for (int j = 0; j <= 3; ++j)
    for (int m = -1; m <= 3; ++m)
      if (!(dq(s_series(j, m, order)) == s_series(j - 1, m + 1, order) + s_series(j, m + 1, order))) {
        ok_rec = false;
        bad_rec = "S_" + ij(j, m);
      }
  rep.add(expect_true("d_T S_{j,m} = S_{j-1,m+1} + S_{j,m+1}", ok_rec, bad_rec));

  // Generating identity: the a-th Taylor coefficient in (y - T) of the
  // right-hand side, a polynomial in T with coefficients in y, against S_{j,a+l}.
  bool ok_gen = true;
  std::string bad_gen;
  const int amax = 3;
  LogSeries t = LogSeries::t_power(order + 1, 1);
  for (int l = -1; l <= 1; ++l)
    for (int j = 0; j <= 1; ++j) {
      int n = l + j + 1;
      std::vector<LogSeries> c;
      Rat fact = 1;
      for (int k = 0; k <= j; ++k) {
        if (k > 0) fact *= k;
        Rat w = (k % 2 ? Rat(-1) : Rat(1)) / fact * (j % 2 ? Rat(1) : Rat(-1));
        c.push_back(dt(I[j - k], n) * w);
      }
      for (int a = 0; a <= amax; ++a) {
        if (n + a < 0) continue;
        LogSeries at_T(order + 1);
        LogSeries tk = LogSeries::t_power(order + 1, 0);
        for (int k = 0; k <= j; ++k) {
          if (k > 0) tk = tk * t;
          at_T += tk * dt(c[k], a);
        }
        QSeries rhs = at_T.as_q().truncated(order);
        if (l == -1 && a == 0) rhs[0] += (j % 2 ? Rat(-1) : Rat(1)) * binomial(Rat(n), j);
        // (-1)^a/a! (-(y-T))^a = (y-T)^a/a!
        if (!(rhs == s_series(j, a + l, order))) {
          ok_gen = false;
          bad_gen = "l = " + std::to_string(l) + ", j = " + std::to_string(j) + ", a = " + std::to_string(a);
        }
      }
    }
  rep.add(expect_true("generating identity for l in {-1,0,1}, j in {0,1}, (y-T)^a with a <= 3", ok_gen, bad_gen));

  QSeries s0 = s_series(0, -1, order);
  rep.add(expect_equal("S_{0,-1} = -(I_0 - 1)", s0, -(I[0].as_q().truncated(order) - QSeries::constant(order, Rat(1)))));
  if (order >= 1) rep.note("S_{0,-1}[Q^1]", to_string(s0[1]));
  rep.add(expect_true("S_{j,m} = 0 for j < 0", s_series(-1, 0, order).is_zero()));
  return rep;
}

QSeries contrib_A_remainder(const MspContext& ctx) {
  int N = ctx.order;
  QSeries one = QSeries::constant(N, Rat(1));
  QSeries dlogI0 = dq(ctx.M.I0) * ctx.inv_I0;
  return (ctx.M.Tp - one) * rat(-25, 12) + dlogI0 * rat(25, 3) - ctx.g1_over_I0 * rat(25, 3);
}

QSeries contrib_A_from_k(const MspContext& ctx) {
  QSeries K21 = k_series(ctx, 2, 1), K12 = k_series(ctx, 1, 2);
  QSeries eta = coe_tprime(regularize(ghost_z01(ctx) * rat(1, 5)).eta, 0);
  return K21 * rat(40, 24) - K12 * rat(10, 24) - eta * rat(200, 24);
}

QSeries contrib_B(const MspContext& ctx) {
  int N = ctx.order;
  QSeries Tpp = dq(ctx.M.Tp);
  return Tpp * qs_invert(ctx.M.Tp) * rat(1, 2) + dq(ctx.M.I0) * ctx.inv_I0 * Rat(2) + qs_log(beta_series(N)) * rat(1, 5);
}

QSeries contrib_B_from_ifun(int order) {
  if (order < 2) throw TruncationError("type-B route needs order >= 2");
  return desired_identity(build_factored_pf(order)).lhs.as_q();
}

QSeries contrib_C(const MspContext& ctx) {
  int N = ctx.order;
  QSeries C = alpha_series(N) * qs_invert(beta_series(N));
  return ctx.g1_over_I0 * rat(-1, 5) - qs_log(beta_series(N)) * rat(1, 5) - C * rat(1, 12);
}

QSeries contrib_C_from_eta(const MspContext& ctx) {
  BiSeries Z = z6_star(ctx);
  RegularizingPair p = regularize(Z);
  QSeries res1 = coe_tprime(bi_log1p(Z).h_coef(0), 1);
  return coe_tprime(p.eta, 1) * rat(1, 5) + coe_tprime(p.eta, 2) * rat(1, 24) - res1 * rat(1, 24);
}

QSeries contrib_D(const MspContext& ctx) { return ctx.g1_over_I0 * rat(128, 15); }

TQSeries one_plus_z6_star_at(const MspContext& ctx, const Rat& hbar) {
  if (sgn(hbar) == 0) throw SeriesError("hbar must be nonzero");
  int N = ctx.order;
  TQSeries S(N);
  for (int d = 0; d <= N; ++d) {
    Rat r = 1;
    for (int k = 1; k <= 5 * d; ++k) r *= Rat(-5) + k * hbar;
    for (int k = 1; k <= d; ++k) {
      Rat f = Rat(-1) + k * hbar;
      if (sgn(f) == 0) throw SeriesError("hbar sits on a pole of the summand");
      r /= f * f * f * f * f;
    }
    // prod_{m<=d}(1 + t'/(m hbar))
    TPrimePoly p(Rat(1));
    for (int m = 1; m <= d; ++m) {
      TPrimePoly f(Rat(1));
      f[1] = 1 / (m * hbar);
      p = p * f;
    }
    S[d] = p * r;
  }
  TQSeries arg = lift_tprime(ctx.tau * (1 / hbar)) - lift_tprime(ctx.g1_over_I0 * (1 / hbar), 1);
  return lift_tprime(ctx.inv_I0) * series_exp(arg) * S;
}

QSeries contrib_D_at_5(const MspContext& ctx) {
  TQSeries L = series_log(one_plus_z6_star_at(ctx, Rat(5)));
  return coe_tprime(L, 1) * rat(-128, 3) - coe_tprime(L, 2) * rat(125, 3);
}

QSeries f1_closed(const MspContext& ctx) {
  int N = ctx.order;
  return ctx.tau * rat(25, 12) - qs_log(ctx.M.I0) * rat(31, 3) - qs_log(ctx.M.Tp) * rat(1, 2) -
         qs_log(beta_series(N)) * rat(1, 12);
}

ContributionSet assemble(const MspContext& ctx) {
  ContributionSet s;
  s.order = ctx.order;
  s.A_remainder = contrib_A_remainder(ctx);
  s.B = contrib_B(ctx);
  s.C = contrib_C(ctx);
  s.D = contrib_D(ctx);
  s.F1_prime = -(s.A_remainder + s.B + s.C + s.D);
  s.F1 = dq_inv(s.F1_prime);
  QSeries inQ = revert_to_Q(s.F1, ctx.tau);
  for (int d = 1; d <= ctx.order; ++d) s.N1.push_back(inQ[d]);
  return s;
}

ContributionSet assemble(int order) { return assemble(build_msp_context(order)); }

std::vector<Rat> genus1_invariants(int order, int dmax) {
  if (dmax > order) throw TruncationError("dmax exceeds truncation order");
  std::vector<Rat> n = assemble(order).N1;
  n.resize(dmax);
  return n;
}

Report check_contributions(int order) {
  Report rep;
  rep.suite = "assembly";
  MspContext ctx = build_msp_context(order);
  QSeries A = contrib_A_remainder(ctx);
  rep.add(expect_equal("type A: closed form = K-series and ghost route", A, contrib_A_from_k(ctx)));
  QSeries B = contrib_B(ctx);
  if (order >= 2) rep.add(expect_equal("type B: closed form = I-function integrals", B, contrib_B_from_ifun(order)));
  QSeries C = contrib_C(ctx);
  rep.add(expect_equal("type C: closed form = eta route", C, contrib_C_from_eta(ctx)));
  QSeries D = contrib_D(ctx);
  rep.add(expect_equal("type D: closed form = evaluation at hbar = 5", D, contrib_D_at_5(ctx)));
  TQSeries z5 = one_plus_z6_star_at(ctx, Rat(5));
  rep.add(expect_equal("type D: Coe_{t'^2} ln(1 + Z6*(5)) = 0", coe_tprime(series_log(z5), 2), QSeries(order)));
  if (order >= 1) {
    rep.note("A[q^1]", to_string(A[1]));
    rep.note("B[q^1]", to_string(B[1]));
    rep.note("C[q^1]", to_string(C[1]));
    rep.note("D[q^1]", to_string(D[1]));
  }
  return rep;
}

Report check_assembly(int order) {
  Report rep = check_contributions(order);
  rep.suite = "assembly";
  MspContext ctx = build_msp_context(order);
  ContributionSet s = assemble(ctx);
  QSeries closed = f1_closed(ctx);
  QSeries sum = s.A_remainder + s.B + s.C + s.D + dq(closed);
  rep.add(expect_equal("A + B + C + D + F1' = 0 with F1 closed form", sum, QSeries(order)));
  rep.add(expect_equal("F1 from the ODE = closed form", s.F1, closed));
  if (order >= 1) {
    rep.add(expect_true("N_{1,1} = 2875/12", s.N1[0] == rat(2875, 12), to_string(s.N1[0])));
    rep.note("F1'[q^1]", to_string(s.F1_prime[1]));
  }
  for (int d = 1; d <= order; ++d) rep.note("N_{1," + std::to_string(d) + "}", to_string(s.N1[d - 1]));

  std::vector<Rat> n0 = genus0_invariants(ctx.M, std::min(order, 3));
  const Rat expect0[3] = {Rat(2875), rat(4876875, 8), rat(8564575000L, 27)};
  bool ok0 = true;
  for (size_t i = 0; i < n0.size(); ++i) ok0 = ok0 && n0[i] == expect0[i];
  rep.add(expect_true("N_{0,1..3} = 2875, 4876875/8, 8564575000/27", ok0));

  ContributionSet wider = assemble(order + 2);
  bool stable = true;
  std::string where;
  for (int d = 1; d <= order; ++d)
    if (s.N1[d - 1] != wider.N1[d - 1]) {
      stable = false;
      where = "d = " + std::to_string(d);
      break;
    }
  rep.add(expect_true("genus-one table stable when the order is raised by 2", stable, where));
  return rep;
}

}  // namespace msp
