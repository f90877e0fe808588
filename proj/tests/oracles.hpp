#pragma once

// Reference implementations used only by the tests. They are deliberately
// naive and share no code paths with the library beyond the Rat type.

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "msp/rat.hpp"

namespace oracle {

using msp::Int;
using msp::Rat;
using Vec = std::vector<Rat>;

inline Rat frac(long a, long b) {
  Rat r(a, b);
  r.canonicalize();
  return r;
}

inline Int fact(int n) {
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// (5d)!/(d!)^5
inline Rat a0(int d) {
  Int f = fact(d);
  return Rat(fact(5 * d)) / Rat(f * f * f * f * f);
}

inline Vec mul(const Vec& a, const Vec& b) {
  size_t n = std::min(a.size(), b.size());
  Vec r(n, Rat(0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; i + j < n; ++j) r[i + j] += a[i] * b[j];
  return r;
}

// exp(f), f(0) = 0, by the Taylor series of exp.
inline Vec exp(const Vec& f) {
  size_t n = f.size();
  Vec r(n, Rat(0)), term(n, Rat(0));
  r[0] = 1;
  term[0] = 1;
  for (size_t k = 1; k < n; ++k) {
    term = mul(term, f);
    for (size_t i = 0; i < n; ++i) r[i] += term[i] / Rat(fact(static_cast<int>(k)));
  }
  return r;
}

// log(1 + z), z(0) = 0, by the Taylor series of log.
inline Vec log1p(const Vec& z) {
  size_t n = z.size();
  Vec r(n, Rat(0)), pw(n, Rat(0));
  pw[0] = 1;
  for (size_t k = 1; k < n; ++k) {
    pw = mul(pw, z);
    Rat w = frac(k % 2 ? 1 : -1, static_cast<long>(k));
    for (size_t i = 0; i < n; ++i) r[i] += w * pw[i];
  }
  return r;
}

// [h^i] of prod_{k<=5d}(5h+k)/prod_{k<=d}(h+k)^5 for i <= 3, through its logarithm.
inline std::array<Rat, 4> frobenius(int d) {
  Vec lg(4, Rat(0));
  for (int i = 1; i <= 3; ++i) {
    Rat s = 0;
    for (int k = 1; k <= 5 * d; ++k) {
      Rat x = frac(5, k), p = 1;
      for (int e = 0; e < i; ++e) p *= x;
      s += p;
    }
    for (int k = 1; k <= d; ++k) {
      Rat x = frac(1, k), p = 1;
      for (int e = 0; e < i; ++e) p *= x;
      s -= 5 * p;
    }
    lg[i] = (i % 2 ? Rat(1) : Rat(-1)) * s / i;
  }
  Vec e = exp(lg);
  std::array<Rat, 4> r;
  for (int i = 0; i < 4; ++i) r[i] = a0(d) * e[i];
  return r;
}

// Genus-one psi numbers by the closed formula
// <tau_k1 ... tau_kn>_1 = (1/24) multinomial(n; k) (1 - sum_{i>=2} (i-2)!(n-i)!/n! e_i(k)).
inline Rat psi_genus1(const std::vector<int>& k) {
  int n = static_cast<int>(k.size());
  int sum = 0;
  for (int x : k) sum += x;
  if (n == 0 || sum != n) return 0;
  Rat multi = Rat(fact(n));
  for (int x : k) multi /= Rat(fact(x));
  // elementary symmetric polynomials of k
  Vec e(n + 1, Rat(0));
  e[0] = 1;
  for (int x : k)
    for (int i = n; i >= 1; --i) e[i] += e[i - 1] * x;
  Rat s = 1;
  for (int i = 2; i <= n; ++i) s -= Rat(fact(i - 2) * fact(n - i)) / Rat(fact(n)) * e[i];
  return multi * s / 24;
}

// BPS numbers of the quintic.
inline const std::vector<Rat>& n0_bps() {
  static const std::vector<Rat> v{Rat(2875), Rat(609250), Rat(317206375), Rat(Int("242467530000"))};
  return v;
}
inline const std::vector<Rat>& n1_bps() {
  static const std::vector<Rat> v{Rat(0), Rat(0), Rat(609250), Rat(Int("3721431625"))};
  return v;
}

// N_{0,d} = sum_{k | d} n_{0,d/k} / k^3
inline Rat genus0_from_bps(int d) {
  Rat r = 0;
  for (int k = 1; k <= d; ++k)
    if (d % k == 0) r += n0_bps().at(d / k - 1) / Rat(k * k * k);
  return r;
}

// Q^d coefficient of sum_b [(1/12) n_{0,b} sum_k Q^{kb}/k + n_{1,b} sum_k sigma_1(k)/k Q^{kb}].
inline Rat genus1_from_bps(int d) {
  Rat r = 0;
  for (int b = 1; b <= d; ++b) {
    if (d % b) continue;
    int k = d / b;
    int sigma = 0;
    for (int i = 1; i <= k; ++i)
      if (k % i == 0) sigma += i;
    r += n0_bps().at(b - 1) / (12 * k) + n1_bps().at(b - 1) * frac(sigma, k);
  }
  return r;
}

// Small deterministic generator for property tests.
struct Gen {
  std::mt19937_64 rng;
  explicit Gen(uint64_t seed) : rng(seed) {}
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
  Rat rational(int span = 9) {
    int num = integer(-span, span), den = integer(1, span);
    return frac(num, den);
  }
};

}  // namespace oracle
