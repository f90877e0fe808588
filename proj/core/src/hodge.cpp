#include "msp/hodge.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "msp/msp_series.hpp"

namespace msp {

namespace {

Rat psi_sorted(std::vector<int> k, std::map<std::vector<int>, Rat>& memo) {
  int n = static_cast<int>(k.size());
  int sum = 0;
  for (int x : k) {
    if (x < 0) return Rat(0);
    sum += x;
  }
  if (n == 0 || sum != n) return Rat(0);
  if (n == 1) return rat(1, 24);  // k = (1)
  auto it = memo.find(k);
  if (it != memo.end()) return it->second;
  Rat r = 0;
  if (k.front() == 0) {
    // String equation removes a tau_0.
    std::vector<int> rest(k.begin() + 1, k.end());
    for (size_t j = 0; j < rest.size(); ++j) {
      if (rest[j] == 0) continue;
      std::vector<int> v = rest;
      --v[j];
      std::sort(v.begin(), v.end());
      r += psi_sorted(v, memo);
    }
  } else {
    // sum k_i = n with no zero entry forces every k_i = 1; dilaton removes one.
    if (k.back() != 1) throw SeriesError("dimension argument violated");
    std::vector<int> rest(k.begin() + 1, k.end());
    r = Rat(n - 1) * psi_sorted(rest, memo);
  }
  memo.emplace(k, r);
  return r;
}

}  // namespace

Rat psi_genus1(std::vector<int> k) {
  std::sort(k.begin(), k.end());
  std::map<std::vector<int>, Rat> memo;
  return psi_sorted(std::move(k), memo);
}

Rat lambda_psi_genus1(const std::vector<int>& i) {
  int k = static_cast<int>(i.size());
  int sum = 0;
  for (int x : i) {
    if (x < 0) return Rat(0);
    sum += x;
  }
  if (k == 0 || sum != k - 1) return Rat(0);
  Rat r = Rat(factorial(k - 1));
  for (int x : i) r /= Rat(factorial(x));
  return r / 24;
}

Rat lambda_b(int b, const std::vector<int>& r) {
  int N = static_cast<int>(r.size());
  if (b < N) throw SeriesError("lambda_b needs b >= number of entries");
  for (int x : r)
    if (x < 0) return Rat(0);
  std::map<std::vector<int>, Rat> memo;
  Rat total = 0;
  std::vector<int> beta(N, 0);
  std::function<void(int, int)> rec = [&](int l, int left) {
    if (l == N) {
      if (left != 0) return;
      std::vector<int> ex = beta;
      ex.resize(b, 0);
      std::sort(ex.begin(), ex.end());
      Rat w = psi_sorted(ex, memo);
      if (sgn(w) == 0) return;
      for (int i = 0; i < N; ++i) w *= Rat(factorial(r[i])) / Rat(factorial(r[i] - beta[i]));
      total += w;
      return;
    }
    for (int x = 0; x <= std::min(r[l], left); ++x) {
      beta[l] = x;
      rec(l + 1, left - x);
    }
  };
  rec(0, b);
  return total;
}

namespace {

// Partitions of s into at most m positive parts, padded with zeros to length m.
void multisets(int s, int m, int maxpart, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (s == 0) {
    std::vector<int> v = cur;
    v.resize(m, 0);
    out.push_back(v);
    return;
  }
  if (static_cast<int>(cur.size()) == m) return;
  for (int p = std::min(s, maxpart); p >= 1; --p) {
    cur.push_back(p);
    multisets(s - p, m, p, cur, out);
    cur.pop_back();
  }
}

// Number of distinct orderings of a multiset, m!/prod mult!.
Rat orderings(const std::vector<int>& v) {
  std::map<int, int> mult;
  for (int x : v) ++mult[x];
  Rat r = Rat(factorial(v.size()));
  for (auto [x, c] : mult) r /= Rat(factorial(c));
  return r;
}

// Residues R_k = Res(hbar^{-k} Z) = [hbar^{k-1}] Z, zero-extended beyond the
// window. The extension is harmless: in a product of m factors of positive
// q-valuation, a factor R_k is only read up to degree n - m + 1, which the
// callers keep inside the window (asserted there).
std::vector<TQSeries> residues(const BiSeries& Z, int kmax) {
  std::vector<TQSeries> R;
  for (int k = 0; k <= kmax; ++k) {
    TQSeries known = Z.h_coef(k - 1);
    TQSeries full(Z.order());
    for (int d = 0; d <= known.order(); ++d) full[d] = known[d];
    if (!RingTraits<TPrimePoly>::is_zero(full[0])) throw SeriesError("residue factor has a q^0 term");
    R.push_back(full);
  }
  return R;
}

TQSeries power_product(const std::vector<TQSeries>& R, const std::vector<int>& a, int order) {
  TQSeries p = TQSeries::constant(order, RingTraits<TPrimePoly>::one());
  for (int x : a) p = p * R[x];
  return p;
}

}  // namespace

TQSeries formula1_lhs(const BiSeries& Z, int a) {
  int N = Z.order();
  if (a < 0) throw SeriesError("a must be non-negative");
  // Factors R_k with k <= m - 1 - a are read up to degree N - m + 1 <= P - k + 1.
  if (Z.kappa() != 1 || Z.prec() < N) throw TruncationError("hbar window too small for formula1");
  std::vector<TQSeries> R = residues(Z, std::max(N - 1, 0));
  TQSeries total(N);
  for (int m = a + 1; m <= N; ++m) {
    std::vector<std::vector<int>> ms;
    std::vector<int> cur;
    multisets(m - 1 - a, m, m - 1 - a, cur, ms);
    for (const auto& v : ms) {
      Rat w = orderings(v) / m;
      for (int x : v) w *= (x % 2 ? Rat(-1) : Rat(1)) / Rat(factorial(x));
      total += power_product(R, v, N) * w;
    }
  }
  return total;
}

Report check_formula1(const BiSeries& Z, int a, int order) {
  Report rep;
  rep.suite = "formula1";
  BiSeries Zt = Z.truncated(std::min(order, Z.order()));
  RegularizingPair pair = regularize(Zt);
  TQSeries eta_pow = TQSeries::constant(Zt.order(), RingTraits<TPrimePoly>::one());
  for (int i = 0; i <= a; ++i) eta_pow = eta_pow * pair.eta;
  rep.add(expect_equal("formula1 a = " + std::to_string(a), formula1_lhs(Zt, a), eta_pow * rat(1, a + 1)));
  return rep;
}

TQSeries lemmX_lhs(const BiSeries& Z) {
  int N = Z.order();
  // Factors R_k with k <= m are read up to degree N - m + 1 <= P - k + 1.
  if (Z.kappa() != 1 || Z.prec() < N) throw TruncationError("hbar window too small for LemmX");
  std::vector<TQSeries> R = residues(Z, N);
  std::map<std::vector<int>, Rat> memo;
  TQSeries total(N);
  for (int m = 1; m <= N; ++m) {
    std::vector<std::vector<int>> ms;
    std::vector<int> cur;
    multisets(m, m, m, cur, ms);
    for (auto v : ms) {
      std::vector<int> s = v;
      std::sort(s.begin(), s.end());
      Rat w = psi_sorted(s, memo);
      if (sgn(w) == 0) continue;
      w *= orderings(v) / Rat(factorial(m));
      int sum = 0;
      for (int x : v) sum += x;
      if (sum % 2) w = -w;
      total += power_product(R, v, N) * w;
    }
  }
  return total;
}

Report check_lemmX(int order) {
  Report rep;
  rep.suite = "lemmX";
  MspContext ctx = build_msp_context(order);
  BiSeries Z = z6_star(ctx);
  RegularizingPair pair = regularize(Z);
  TQSeries c0 = pair.zbar.h_coef(0);
  TQSeries rhs = series_log1p(c0) * rat(-1, 24);
  rep.add(expect_equal("LemmX: X = -(1/24) ln(1 + Zbar|hbar^0)", lemmX_lhs(Z).truncated(c0.order()), rhs));
  return rep;
}

Report check_hodge_numbers() {
  Report rep;
  rep.suite = "hodge";
  bool ok = true;
  std::string where;
  for (int N = 1; N <= 8; ++N) {
    Rat got = psi_genus1(std::vector<int>(N, 1));
    if (got != Rat(factorial(N - 1)) / 24) {
      ok = false;
      where = "N = " + std::to_string(N);
    }
  }
  rep.add(expect_true("int psi_1...psi_N = (N-1)!/24 for N <= 8", ok, where));

  ok = true;
  where.clear();
  int cases = 0;
  for (int N = 1; N <= 4; ++N) {
    std::vector<int> r(N, 0);
    std::function<void(int, int)> rec = [&](int l, int left) {
      if (l == N) {
        for (int b = N; b <= 5; ++b) {
          Rat rhs = 0;
          for (int i = 0; i < N; ++i) {
            std::vector<int> e = r;
            --e[i];
            rhs += Rat(r[i]) * lambda_b(b, e);
          }
          ++cases;
          if (lambda_b(b + 1, r) != rhs) {
            ok = false;
            where = "b = " + std::to_string(b);
          }
        }
        return;
      }
      for (int x = 0; x <= left; ++x) {
        r[l] = x;
        rec(l + 1, left - x);
      }
    };
    rec(0, 4);
  }
  rep.add(expect_true("Lambda_{b+1}(r) = sum r_i Lambda_b(r - e_i), b <= 5, |r| <= 4", ok,
                      ok ? std::to_string(cases) + " cases" : where));
  ok = true;
  for (int N = 1; N <= 5; ++N)
    ok = ok && lambda_b(N, std::vector<int>(N, 1)) == Rat(factorial(N - 1)) / 24;
  rep.add(expect_true("Lambda_N(1,...,1) = (N-1)!/24", ok));
  return rep;
}

}  // namespace msp
