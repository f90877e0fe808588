#include "msp/ifun.hpp"

#include "msp/rat_func.hpp"

namespace msp {

Cubic cubic_mul(const Cubic& a, const Cubic& b) {
  Cubic r{0, 0, 0, 0};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; i + j < 4; ++j) r[i + j] += a[i] * b[j];
  return r;
}

Cubic cubic_inv(const Cubic& a) {
  if (sgn(a[0]) == 0) throw SeriesError("not invertible");
  Cubic r{0, 0, 0, 0};
  r[0] = 1 / a[0];
  for (int m = 1; m < 4; ++m) {
    Rat acc = 0;
    for (int k = 1; k <= m; ++k) acc += a[k] * r[m - k];
    r[m] = -acc * r[0];
  }
  return r;
}

Cubic a_cubic(int d) {
  Cubic num{1, 0, 0, 0}, den{1, 0, 0, 0};
  for (int k = 1; k <= 5 * d; ++k) num = cubic_mul(num, Cubic{Rat(k), Rat(5), 0, 0});
  for (int k = 1; k <= d; ++k) {
    Cubic f{Rat(k), Rat(1), 0, 0};
    for (int p = 0; p < 5; ++p) den = cubic_mul(den, f);
  }
  return cubic_mul(num, cubic_inv(den));
}

Cubic b_cubic(int d) {
  if (d <= 0) throw SeriesError("degree must be positive");
  Cubic num{1, 0, 0, 0}, den{1, 0, 0, 0};
  for (int k = 1; k <= 5 * d; ++k) {
    Rat kd = rat(k, d);
    num = cubic_mul(num, Cubic{kd, kd - 5, 0, 0});
  }
  for (int k = 1; k <= d; ++k) {
    Rat kd = rat(k, d);
    Cubic f{-kd, 1 - kd, 0, 0};
    for (int p = 0; p < 5; ++p) den = cubic_mul(den, f);
  }
  return cubic_mul(num, cubic_inv(den));
}

AdBd ad_bd_coefficients(int d) {
  if (d <= 0) throw SeriesError("degree must be positive");
  AdBd r;
  r.a = a_cubic(d);
  const Cubic& a = r.a;
  Rat s = d % 2 ? Rat(-1) : Rat(1);
  Rat D(d);
  r.b[0] = s * a[0];
  r.b[1] = -s * a[1] * D;
  r.b[2] = s * (a[2] * D * D + a[1] * D);
  r.b[3] = -s * (a[3] * D * D * D + 2 * a[2] * D * D + a[1] * D);
  return r;
}

IFunctions build_ifunctions(int order) {
  if (order < 0) throw SeriesError("negative truncation order");
  IFunctions r;
  r.order = order;
  for (auto& f : r.F) f = QSeries(order);
  r.g1 = QSeries(order);
  r.g5 = QSeries(order);
  for (int d = 0; d <= order; ++d) {
    Cubic a = a_cubic(d);
    for (int k = 0; k < 4; ++k) r.F[k][d] = a[k];
    r.g1[d] = a[0] * harmonic(d);
    r.g5[d] = a[0] * harmonic(5 * d);
  }
  for (int k = 0; k < 4; ++k) {
    LogSeries Ik(order);
    Rat fact = 1;
    for (int i = 0; i <= k; ++i) {
      if (i > 0) fact *= i;
      Ik.set_part(i, r.F[k - i] * (1 / fact));
    }
    r.I[k] = Ik;
  }
  return r;
}

LogSeries d_T(const MirrorData& M, const LogSeries& f) { return dt(f) * LogSeries(qs_invert(M.Tp)); }

MirrorData build_mirror(const IFunctions& I) {
  MirrorData M;
  int n = I.order;
  M.order = n;
  M.I0 = I[0].as_q();
  M.g1 = I.g1;
  M.g5 = I.g5;
  LogSeries inv0(qs_invert(M.I0));
  for (int k = 0; k < 4; ++k) M.J[k] = I[k] * inv0;
  M.T = M.J[1];
  M.T_minus_t = (M.T - LogSeries::t_power(n, 1)).as_q();
  M.Tp = dt(M.T).as_q();
  M.FT = M.J[2];
  M.FTT = d_T(M, M.FT);
  M.FTTT = d_T(M, M.FTT).as_q();
  M.F = (M.T * M.J[2] - M.J[3]) * rat(1, 2);
  return M;
}

std::vector<Rat> genus0_invariants(const MirrorData& M, int dmax) {
  if (dmax > M.order) throw TruncationError("dmax exceeds truncation order");
  QSeries dF0 = (M.J[2] * Rat(5) - M.T * M.T * rat(5, 2)).as_q();
  QSeries inQ = revert_to_Q(dF0, M.T_minus_t);
  std::vector<Rat> out;
  for (int d = 1; d <= dmax; ++d) out.push_back(inQ[d] / d);
  return out;
}

Report check_msp_to_givental(int order) {
  Report rep;
  rep.suite = "msp_to_givental";
  IFunctions I = build_ifunctions(order);
  std::array<QSeries, 4> lhs;
  for (auto& s : lhs) s = QSeries(order);
  lhs[0][0] = 1;
  for (int d = 1; d <= order; ++d) {
    AdBd ab = ad_bd_coefficients(d);
    Rat sign = d % 2 ? Rat(-1) : Rat(1);
    for (int i = 0; i < 4; ++i) lhs[i][d] = ab.b[i] * sign;
  }
  LogSeries t = LogSeries::t_power(order, 1);
  LogSeries t2 = t * t * rat(1, 2), t3 = t * t * t * rat(1, 6);
  std::array<LogSeries, 4> rhs;
  rhs[0] = I[0];
  rhs[1] = -dt(I[1]) + dt(t * I[0]);
  rhs[2] = dt(I[2], 2) - dt(t * dt(I[1])) + dt(t2 * dt(I[0]));
  rhs[3] = -dt(I[3], 3) + dt(t * dt(I[2], 2)) - dt(t2 * dt(I[1], 2)) + dt(t3 * dt(I[0], 2));
  for (int i = 0; i < 4; ++i)
    rep.add(expect_equal("MSPtoGiv identity " + std::to_string(i), LogSeries(lhs[i]), rhs[i]));

  bool direct = true;
  std::string where;
  for (int d = 1; d <= order && direct; ++d) {
    AdBd ab = ad_bd_coefficients(d);
    if (ab.b != b_cubic(d)) {
      direct = false;
      where = "first mismatch at d = " + std::to_string(d);
    }
  }
  rep.add(expect_true("b_i(d) sign rule matches direct B_d(h) expansion", direct, where));
  return rep;
}

Report check_special_geometry(int order) {
  Report rep;
  rep.suite = "special_geometry";
  MirrorData M = build_mirror(build_ifunctions(order));
  rep.add(expect_equal("d_T J3 + J2 = T d_T J2", d_T(M, M.J[3]) + M.J[2], M.T * M.FTT));
  RatFunc beta(Poly(std::vector<Rat>{Rat(1), Rat(-1)}), Poly::constant(Rat(1)));
  QSeries lhs = beta.to_q(order) * M.I0 * M.I0 * M.Tp * M.Tp * M.Tp * M.FTTT;
  rep.add(expect_equal("(1-alpha) I0^2 T'^3 F_TTT = 1", lhs, QSeries::constant(order, Rat(1))));
  rep.add(expect_equal("T - t = 5(g5 - g1)/I0", M.T_minus_t, (M.g5 - M.g1) * qs_invert(M.I0) * Rat(5)));
  rep.add(expect_equal("dT^{-1} J2 = (T J2 - J3)/2", d_T(M, M.F), M.J[2]));
  return rep;
}

}  // namespace msp
