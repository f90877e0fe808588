#include "msp/msp_series.hpp"

#include <string>

namespace msp {

MspContext build_msp_context(int order, int prec) {
  if (order < 1) throw SeriesError("order must be at least 1");
  MspContext ctx;
  ctx.order = order;
  ctx.prec = prec < 0 ? order + 4 : prec;
  ctx.I = build_ifunctions(order);
  ctx.M = build_mirror(ctx.I);
  ctx.inv_I0 = qs_invert(ctx.M.I0);
  ctx.tau = ctx.M.T_minus_t;
  ctx.g1_over_I0 = ctx.I.g1 * ctx.inv_I0;
  ctx.a.resize(order + 1);
  for (int d = 0; d <= order; ++d) {
    Int num = factorial(5 * d), den = factorial(d);
    ctx.a[d] = Rat(num) / Rat(den * den * den * den * den);
  }
  return ctx;
}

namespace {

// prod_{k<=5d}(-5+kℏ) / prod_{k<=d}(-1+kℏ)^5 up to ℏ^hi.
HLaurent r_coefficient(int d, int hi) {
  HPoly num{Rat(1)}, den{Rat(1)};
  for (int k = 1; k <= 5 * d; ++k) num = hpoly_mul(num, {Rat(-5), Rat(k)});
  for (int k = 1; k <= d; ++k)
    for (int i = 0; i < 5; ++i) den = hpoly_mul(den, {Rat(-1), Rat(k)});
  return HLaurent::rational(num, den, 0, hi);
}

// Coefficients of sum_{m<=d} 1/(1+mℏ)^p, p = 1 or 2, up to ℏ^n.
std::vector<Rat> harmonic_h(int d, int p, int n) {
  std::vector<Rat> c(std::max(n + 1, 0), Rat(0));
  for (int m = 1; m <= d; ++m) {
    Rat pw = 1;
    for (int e = 0; e <= n; ++e) {
      c[e] += (p == 1 ? Rat(1) : Rat(e + 1)) * pw;
      pw *= -m;
    }
  }
  return c;
}

void add_coeffs(BiSeries& B, int d, int shift, const std::vector<Rat>& c, const Rat& w) {
  for (int i = 0; i < static_cast<int>(c.size()); ++i) {
    int e = i + shift;
    if (e <= B.hi(d) && sgn(c[i]) != 0) B.add(d, 0, e, w * c[i]);
  }
}

BiSeries one_plus(const BiSeries& Z) { return BiSeries::one(Z.order(), Z.prec(), Z.kappa()) + Z; }

}  // namespace

BiSeries script_R(const MspContext& ctx) {
  BiSeries R(ctx.order, ctx.prec);
  for (int d = 0; d <= ctx.order; ++d) R.set_laurent(d, 0, r_coefficient(d, R.hi(d)));
  return R;
}

BiSeries lambda_series(const MspContext& ctx) {
  BiSeries e = bi_exp(BiSeries::from_q(ctx.tau, ctx.prec, -1));
  return ctx.inv_I0 * (e * script_R(ctx));
}

BiSeries tilde_z15(const MspContext& ctx) {
  int N = ctx.order, P = ctx.prec;
  // sum_d q^d r_d(ℏ) prod_{m<=d}(1 + t'/(mℏ))
  BiSeries S(N, P);
  for (int d = 0; d <= N; ++d) {
    HLaurent r = r_coefficient(d, S.hi(d) + kTPrimeDeg);
    // elementary symmetric e_j(1, 1/2, ..., 1/d)
    std::vector<Rat> e(kTPrimeDeg + 1, Rat(0));
    e[0] = 1;
    for (int m = 1; m <= d; ++m)
      for (int j = kTPrimeDeg; j >= 1; --j) e[j] += e[j - 1] / m;
    for (int j = 0; j <= kTPrimeDeg; ++j) {
      if (sgn(e[j]) == 0) continue;
      for (int x = S.lo(d); x <= S.hi(d); ++x)
        if (x + j >= 0) S.set(d, j, x, e[j] * r.coef(x + j));
    }
  }
  BiSeries arg = BiSeries::from_q(ctx.tau, P, -1) - BiSeries::from_q(ctx.g1_over_I0, P, -1, 1);
  BiSeries Z = (ctx.inv_I0 * (bi_exp(arg) * S)) * Rat(5);
  Z.add(0, 0, 0, Rat(-5));
  return Z;
}

BiSeries z15(const MspContext& ctx) { return tilde_z15(ctx).tprime_part(0); }

BiSeries z6_star(const MspContext& ctx) { return tilde_z15(ctx) * rat(1, 5); }

BiSeries b_series(const MspContext& ctx, int k) {
  if (k < 0 || k > 2) throw SeriesError("closed form of B_k only for k = 0, 1, 2");
  int N = ctx.order, P = ctx.prec;
  BiSeries Lambda = lambda_series(ctx);
  BiSeries one = BiSeries::one(N, P);
  if (k == 0) return (Lambda - one) * Rat(5);

  // H1 = sum_{d>=1} q^d a_d sum_{m<=d} 1/(1+mℏ)
  BiSeries H1(N, P);
  for (int d = 1; d <= N; ++d) add_coeffs(H1, d, 0, harmonic_h(d, 1, H1.hi(d)), ctx.a[d]);
  BiSeries g1h = BiSeries::from_q(ctx.g1_over_I0, P, -1) * Rat(5);
  BiSeries B1 = (one - Lambda) * Rat(5) - g1h + (ctx.inv_I0 * H1) * Rat(5);
  if (k == 1) return B1;

  // sum_d q^d a_d [(1 + sum_{m=d+1}^{5d} 5/(mℏ)) S_1 - S_2]; the -τ/ℏ S_1 piece
  // is a product of q-series and is added separately.
  BiSeries H(N, P);
  for (int d = 1; d <= N; ++d) {
    int hi = H.hi(d);
    Rat tail = 0;
    for (int m = d + 1; m <= 5 * d; ++m) tail += rat(5, m);
    add_coeffs(H, d, 0, harmonic_h(d, 1, hi), ctx.a[d]);
    add_coeffs(H, d, -1, harmonic_h(d, 1, hi + 1), ctx.a[d] * tail);
    add_coeffs(H, d, 0, harmonic_h(d, 2, hi), -ctx.a[d]);
  }
  H -= BiSeries::from_q(ctx.tau, P, -1) * H1;
  return -B1 - g1h + (ctx.inv_I0 * H) * Rat(5);
}

BiSeries frak_n(const MspContext& ctx, int k) {
  int N = ctx.order;
  BiSeries R(N, ctx.prec, 3);
  if (k >= 0 && k <= 2) return R;
  if (k != 3 && k != 4) throw SeriesError("k must lie in 0..4");
  std::vector<Rat> n0 = genus0_invariants(ctx.M, N);
  // Q(q) = q e^{τ}
  QSeries Qq = QSeries::monomial(N, 1, Rat(1)) * qs_exp(ctx.tau);
  QSeries f1(N), f2(N);
  for (int d = 1; d <= N; ++d) {
    f1[d] = Rat(d) * n0[d - 1];
    f2[d] = n0[d - 1];
  }
  QSeries s1 = compose(f1, Qq), s2 = compose(f2, Qq);
  if (k == 3) return BiSeries::from_q(s1, ctx.prec, -2, 0, 3) * Rat(-1);
  return BiSeries::from_q(s1, ctx.prec, -2, 0, 3) + BiSeries::from_q(s2, ctx.prec, -3, 0, 3) * Rat(2);
}

BiSeries z0k(const MspContext& ctx, int k) {
  if (k < 0 || k > 2) throw SeriesError("Z_{0,k} is assembled only for k = 0, 1, 2; use frak_n for k = 3, 4");
  BiSeries one = BiSeries::one(ctx.order, ctx.prec);
  Rat sign = k % 2 ? Rat(-5) : Rat(5);
  return b_series(ctx, k) + (one - lambda_series(ctx)) * sign;
}

QSeries k_series(const MspContext& ctx, int c, int k) {
  if (c < 1) throw SeriesError("c must be positive");
  return coe_tprime(z0k(ctx, k).h_coef(c - 2), 0);
}

BiSeries ghost_z01(const MspContext& ctx) {
  int N = ctx.order, P = ctx.prec;
  BiSeries S(N, P);
  for (int d = 0; d <= N; ++d) {
    if (d > S.hi(d)) continue;
    Int den = factorial(d);
    Rat c = Rat(factorial(5 * d)) / Rat(den * den * den * den);
    HPoly poly{Rat(1)};
    for (int m = 1; m <= d; ++m) poly = hpoly_mul(poly, {Rat(1), Rat(m)});
    S.set_laurent(d, 0, HLaurent::rational({c}, poly, d, S.hi(d)));
  }
  BiSeries e = bi_exp(BiSeries::from_q(ctx.g1_over_I0, P, -1));
  BiSeries Z = (ctx.inv_I0 * (e * S)) * Rat(5);
  Z.add(0, 0, 0, Rat(-5));
  return Z;
}

RegularizingPair regularize(const BiSeries& Z) {
  if (!Z.zero_constant_term()) throw SeriesError("series has a q^0 term");
  RegularizingPair p;
  p.eta = bi_log1p(Z).residue();
  BiSeries shift = BiSeries::from_tq(p.eta, Z.prec(), -1, Z.kappa());
  p.zbar = bi_exp(-shift) * one_plus(Z) - BiSeries::one(Z.order(), Z.prec(), Z.kappa());
  if (!p.zbar.is_regular()) throw SeriesError("not regularizable within truncation");
  return p;
}

BiSeries from_pair(const RegularizingPair& p) {
  const BiSeries& zb = p.zbar;
  BiSeries shift = BiSeries::from_tq(p.eta, zb.prec(), -1, zb.kappa());
  return bi_exp(shift) * one_plus(zb) - BiSeries::one(zb.order(), zb.prec(), zb.kappa());
}

Report check_msp_series(int order) {
  Report rep;
  rep.suite = "kseries";
  MspContext ctx = build_msp_context(order);
  BiSeries R = script_R(ctx);
  rep.add(expect_true("R at q^0 is 1", R.get(0, 0, 0) == 1 && R.pole_order(0) == 0));
  if (order >= 1) {
    rep.add(expect_true("R at q^1, hbar^0 is 3125", R.get(1, 0, 0) == 3125));
    rep.note("R[q^1 hbar^0]", to_string(R.get(1, 0, 0)));
  }
  BiSeries Lambda = lambda_series(ctx);
  BiSeries one = BiSeries::one(ctx.order, ctx.prec);
  BiSeries tz = tilde_z15(ctx);
  BiSeries z = z15(ctx);
  rep.add(expect_equal("Coe_{t'^0} Z~15 = -5 + 5 Lambda", z, (Lambda - one) * Rat(5)));
  BiSeries B0 = b_series(ctx, 0);
  rep.add(expect_equal("B_0 = Z15", B0, z));
  rep.add(expect_true("Z~15 has no q^0 term", tz.zero_constant_term()));
  bool poles = true;
  std::vector<BiSeries> packaged{tz, B0, b_series(ctx, 1), b_series(ctx, 2), z0k(ctx, 0), z0k(ctx, 1),
                                 z0k(ctx, 2), ghost_z01(ctx)};
  for (const auto& s : packaged) {
    poles = poles && s.zero_constant_term();
    for (int d = 0; d <= s.order(); ++d) poles = poles && s.pole_order(d) <= d;
  }
  rep.add(expect_true("packaged series vanish at q^0 with pole order <= d", poles));
  rep.add(expect_true("frak_n vanishes for k = 0, 1, 2",
                      frak_n(ctx, 0).is_zero() && frak_n(ctx, 1).is_zero() && frak_n(ctx, 2).is_zero()));
  if (order >= 1) {
    BiSeries n3 = frak_n(ctx, 3);
    rep.add(expect_true("frak_n(3) at q^1 is -2875/hbar^2", n3.get(1, 0, -2) == -2875));
    rep.note("B_1[q^1 hbar^0]", to_string(b_series(ctx, 1).get(1, 0, 0)));
  }
  rep.merge(check_god(order));
  return rep;
}

Report check_god(int order) {
  Report rep;
  rep.suite = "kseries";
  MspContext ctx = build_msp_context(order);
  QSeries K12 = k_series(ctx, 1, 2);
  QSeries K21 = k_series(ctx, 2, 1);
  rep.add(expect_equal("K_{1,2} = 5 d/dt (T - t)", K12, dq(ctx.tau) * Rat(5)));
  rep.add(expect_equal("K_{2,1} = 5 I_0'/I_0", K21, dq(ctx.M.I0) * ctx.inv_I0 * Rat(5)));
  if (order >= 1) {
    rep.note("K12[q^1]", to_string(K12[1]));
    rep.note("K21[q^1]", to_string(K21[1]));
  }
  // Residues do not depend on how far the window reaches.
  MspContext wide = build_msp_context(order, ctx.prec + 3);
  rep.add(expect_equal("K_{1,2} stable under a wider hbar window", k_series(wide, 1, 2), K12));
  rep.add(expect_equal("K_{2,1} stable under a wider hbar window", k_series(wide, 2, 1), K21));
  return rep;
}

Report check_eta_coefficients(int order) {
  Report rep;
  rep.suite = "eta";
  MspContext ctx = build_msp_context(order);
  BiSeries Z = z6_star(ctx);
  RegularizingPair pair = regularize(Z);
  BiSeries L = bi_log1p(Z);
  int N = pair.eta.order();
  QSeries alpha = QSeries::monomial(N, 1, Rat(kAlphaScale));
  QSeries beta = QSeries::constant(N, Rat(1)) - alpha;
  QSeries C = alpha * qs_invert(beta);

  QSeries eta0 = coe_tprime(pair.eta, 0), eta1 = coe_tprime(pair.eta, 1), eta2 = coe_tprime(pair.eta, 2);
  rep.add(expect_equal("Coe_{t'^0} eta = T - t", eta0, ctx.tau.truncated(N)));
  QSeries res1 = coe_tprime(L.h_coef(0), 1);
  rep.add(expect_equal("Coe_{t'^1} Res(hbar^-1 ln(1+Z6*)) = 2 alpha/(1-alpha)", res1,
                       (C * Rat(2)).truncated(res1.order())));
  rep.add(expect_equal("Coe_{t'^1} eta = -g1/I0 - ln(1-alpha)", eta1,
                       -ctx.g1_over_I0.truncated(N) - qs_log(beta)));
  rep.add(expect_equal("Coe_{t'^2} eta = 0", eta2, QSeries(N)));
  if (order >= 1) {
    rep.note("eta0[q^1]", to_string(eta0[1]));
    rep.note("eta1[q^1]", to_string(eta1[1]));
  }

  // Expansion of log(1 + A_0 + A_1 t' + A_2 t'^2) in t'.
  BiSeries A0 = Z.tprime_part(0), A1 = Z.tprime_part(1), A2 = Z.tprime_part(2);
  BiSeries inv = bi_inv1p(A0);
  rep.add(expect_equal("Coe_{t'^0} ln(1+Z) = ln(1+A_0)", L.tprime_part(0), bi_log1p(A0)));
  rep.add(expect_equal("Coe_{t'^1} ln(1+Z) = A_1/(1+A_0)", L.tprime_part(1), A1 * inv));
  rep.add(expect_equal("Coe_{t'^2} ln(1+Z) = A_2/(1+A_0) - A_1^2/(2(1+A_0)^2)", L.tprime_part(2),
                       A2 * inv - A1 * A1 * inv * inv * rat(1, 2)));
  return rep;
}

Report check_regularization(int order) {
  Report rep;
  rep.suite = "eta";
  MspContext ctx = build_msp_context(order);

  RegularizingPair g = regularize(ghost_z01(ctx) * rat(1, 5));
  int N = g.eta.order();
  rep.add(expect_equal("ghost: eta = g1/I0", g.eta, lift_tprime(ctx.g1_over_I0.truncated(N))));
  if (order >= 1) rep.note("eta_ghost[q^1]", to_string(g.eta[1][0]));
  rep.add(expect_true("ghost: Zbar regular at hbar = 0", g.zbar.is_regular()));

  BiSeries Z = z6_star(ctx);
  RegularizingPair p = regularize(Z);
  rep.add(expect_true("Z6*: Zbar regular at hbar = 0", p.zbar.is_regular()));
  rep.add(expect_equal("Z6*: pair round trip", from_pair(p), Z.truncated(p.zbar.order())));

  bool threw = false;
  try {
    BiSeries bad(std::min(order, 4), 8, 2);
    bad.set(1, 0, -2, Rat(1));
    regularize(bad);
  } catch (const SeriesError&) {
    threw = true;
  }
  rep.add(expect_true("q/hbar^2 is rejected", threw));
  return rep;
}

}  // namespace msp
