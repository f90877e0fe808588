#include "msp/rat_func.hpp"

#include <sstream>

namespace msp {

Poly::Poly(std::vector<Rat> c) : c_(std::move(c)) { trim(); }

void Poly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + b * Rat(-1); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Rat& s) {
  std::vector<Rat> c = a.c_;
  for (auto& x : c) x *= s;
  return Poly(std::move(c));
}

Poly Poly::theta() const {
  std::vector<Rat> c = c_;
  for (size_t i = 0; i < c.size(); ++i) c[i] *= Rat(static_cast<long>(i));
  return Poly(std::move(c));
}

Rat Poly::eval(const Rat& x) const {
  Rat r = 0;
  for (int i = degree(); i >= 0; --i) r = r * x + c_[i];
  return r;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= degree(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c_[i].get_str() << ")";
    if (i > 0) os << "*a^" << i;
  }
  return os.str();
}

void poly_divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem) {
  if (b.is_zero()) throw SeriesError("polynomial division by zero");
  std::vector<Rat> q(std::max(a.degree() - b.degree() + 1, 0), Rat(0));
  Poly r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int k = r.degree() - b.degree();
    Rat c = r.lead() / b.lead();
    q[k] = c;
    std::vector<Rat> m(k + 1, Rat(0));
    m[k] = c;
    r = r - b * Poly(m);
  }
  quot = Poly(std::move(q));
  rem = r;
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly q, r;
    poly_divmod(a, b, q, r);
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  return a * (1 / a.lead());
}

RatFunc::RatFunc(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw SeriesError("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = Poly();
    den_ = Poly::constant(Rat(1));
    return;
  }
  Poly g = poly_gcd(num, den), r;
  poly_divmod(num, g, num_, r);
  poly_divmod(den, g, den_, r);
  Rat l = den_.lead();
  num_ = num_ * (1 / l);
  den_ = den_ * (1 / l);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RatFunc operator-(const RatFunc& a) { return RatFunc(a.num_ * Rat(-1), a.den_); }
RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.num_, a.den_ * b.den_); }
RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw SeriesError("division by zero rational function");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::theta() const {
  return RatFunc(num_.theta() * den_ - num_ * den_.theta(), den_ * den_);
}

QSeries RatFunc::to_q(int order) const {
  QSeries n(order), d(order);
  Rat p = 1;
  for (int i = 0; i <= order; ++i) {
    n[i] = num_[i] * p;
    d[i] = den_[i] * p;
    p *= kAlphaScale;
  }
  return n * qs_invert(d);
}

std::string RatFunc::str() const { return "(" + num_.str() + ")/(" + den_.str() + ")"; }

}  // namespace msp
