#include <doctest.h>

#include <functional>

#include "msp/hodge.hpp"
#include "msp/msp_series.hpp"
#include "oracles.hpp"

using namespace msp;

namespace {

// All non-decreasing k of length n with sum n.
std::vector<std::vector<int>> shapes(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int min) {
    if (static_cast<int>(cur.size()) == n) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (int x = min; x <= left; ++x) {
      cur.push_back(x);
      rec(left - x, x);
      cur.pop_back();
    }
  };
  rec(n, 0);
  return out;
}

}  // namespace

TEST_CASE("genus-one psi numbers agree with the closed formula") {
  int count = 0;
  for (int n = 1; n <= 8; ++n)
    for (const auto& k : shapes(n)) {
      CHECK(psi_genus1(k) == oracle::psi_genus1(k));
      ++count;
    }
  CHECK(count > 50);
  CHECK(psi_genus1({1}) == rat(1, 24));
  CHECK(psi_genus1({0, 2}) == rat(1, 24));
  CHECK(psi_genus1({1, 1}) == rat(1, 24));
  CHECK(psi_genus1({2}) == 0);
  CHECK(psi_genus1({-1, 2}) == 0);
}

TEST_CASE("psi_1...psi_N = (N-1)!/24") {
  for (int N = 1; N <= 8; ++N) CHECK(psi_genus1(std::vector<int>(N, 1)) == Rat(oracle::fact(N - 1)) / 24);
}

TEST_CASE("string and dilaton equations on random insertions") {
  oracle::Gen g(314);
  for (int trial = 0; trial < 60; ++trial) {
    int n = g.integer(1, 9);
    // random composition of n into n non-negative parts
    std::vector<int> k(n, 0);
    for (int i = 0; i < n; ++i) ++k[g.integer(0, n - 1)];
    // string: <tau_0 prod tau_k> = sum_i <... tau_{k_i - 1} ...>
    std::vector<int> with0 = k;
    with0.push_back(0);
    // sum of the extended tuple is n, length n + 1: off by one, so add one unit
    with0[g.integer(0, n - 1)] += 1;
    Rat rhs = 0;
    for (int i = 0; i < n; ++i) {
      if (with0[i] == 0) continue;
      std::vector<int> v(with0.begin(), with0.begin() + n);
      --v[i];
      rhs += psi_genus1(v);
    }
    CHECK(psi_genus1(with0) == rhs);
    // dilaton: <tau_1 prod tau_k>_{1,n+1} = n <prod tau_k>_{1,n}
    std::vector<int> with1 = k;
    with1.push_back(1);
    CHECK(psi_genus1(with1) == Rat(n) * psi_genus1(k));
  }
}

TEST_CASE("lambda_1 psi integrals") {
  CHECK(lambda_psi_genus1({0}) == rat(1, 24));
  CHECK(lambda_psi_genus1({1, 0}) == rat(1, 24));
  CHECK(lambda_psi_genus1({1, 1, 0}) == rat(2, 24));
  CHECK(lambda_psi_genus1({2, 0, 0}) == rat(1, 24));
  CHECK(lambda_psi_genus1({1}) == 0);
}

TEST_CASE("Lambda_b") {
  CHECK(lambda_b(1, {1}) == rat(1, 24));
  CHECK(lambda_b(2, {-1, 3}) == 0);
  CHECK_THROWS_AS(lambda_b(1, {1, 1}), SeriesError);
  // Only beta = (1,...,1) contributes, each falling factorial being 1.
  for (int N = 1; N <= 6; ++N) CHECK(lambda_b(N, std::vector<int>(N, 1)) == Rat(oracle::fact(N - 1)) / 24);
}

TEST_CASE("Lambda recursion on random arguments") {
  oracle::Gen g(27);
  for (int trial = 0; trial < 40; ++trial) {
    int N = g.integer(1, 3);
    std::vector<int> r(N);
    for (auto& x : r) x = g.integer(0, 3);
    int b = g.integer(N, 5);
    Rat rhs = 0;
    for (int i = 0; i < N; ++i) {
      std::vector<int> v = r;
      --v[i];
      rhs += Rat(r[i]) * lambda_b(b, v);
    }
    CHECK(lambda_b(b + 1, r) == rhs);
  }
}

TEST_CASE("hodge report") { CHECK(check_hodge_numbers().ok()); }

namespace {

// Z = e^{q/hbar} - 1, whose regularizing pair is (q, 0).
BiSeries exp_pole(int order, int prec) {
  BiSeries x = BiSeries::from_q(QSeries::monomial(order, 1, Rat(1)), prec, -1);
  return bi_exp(x) - BiSeries::one(order, prec);
}

}  // namespace

TEST_CASE("formula1 on a pure exponential") {
  BiSeries Z = exp_pole(5, 6);
  RegularizingPair p = regularize(Z);
  CHECK(coe_tprime(p.eta, 0) == QSeries::monomial(5, 1, Rat(1)));
  CHECK(p.zbar.is_zero());
  for (int a = 0; a <= 2; ++a) CHECK(check_formula1(Z, a, 5).ok());
  // eta^{a+1}/(a+1) at q^{a+1}
  CHECK(coe_tprime(formula1_lhs(Z, 1), 0)[2] == rat(1, 2));
  // Zbar = 0, so X vanishes.
  CHECK(lemmX_lhs(Z).is_zero());
}

TEST_CASE("formula1 on the normalized ghost series and Z6*") {
  MspContext ctx = build_msp_context(4);
  for (int a = 0; a <= 2; ++a) {
    CHECK(check_formula1(ghost_z01(ctx) * rat(1, 5), a, 4).ok());
    CHECK(check_formula1(z6_star(ctx), a, 4).ok());
  }
  CHECK(check_lemmX(4).ok());
  CHECK_THROWS_AS(formula1_lhs(exp_pole(5, 6), -1), SeriesError);
  CHECK_THROWS_AS(formula1_lhs(exp_pole(5, 2), 0), TruncationError);
}
