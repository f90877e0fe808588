#include "msp/report.hpp"

namespace msp {

bool Report::ok() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

void Report::merge(const Report& other) {
  for (const auto& c : other.checks) checks.push_back(c);
  for (const auto& v : other.values) values.push_back(v);
}

namespace {

CheckResult from_degree(std::string name, int bad, int order) {
  CheckResult c{std::move(name), bad < 0, bad, {}};
  c.detail = c.pass ? "exact to q^" + std::to_string(order) : "first mismatch at q^" + std::to_string(bad);
  return c;
}

}  // namespace

CheckResult expect_equal(std::string name, const QSeries& a, const QSeries& b) {
  return from_degree(std::move(name), first_difference(a, b), std::min(a.order(), b.order()));
}

CheckResult expect_equal(std::string name, const TQSeries& a, const TQSeries& b) {
  return from_degree(std::move(name), first_difference(a, b), std::min(a.order(), b.order()));
}

CheckResult expect_equal(std::string name, const LogSeries& a, const LogSeries& b) {
  return from_degree(std::move(name), first_difference(a, b), std::min(a.order(), b.order()));
}

CheckResult expect_equal(std::string name, const BiSeries& a, const BiSeries& b) {
  return from_degree(std::move(name), first_difference(a, b), std::min(a.order(), b.order()));
}

CheckResult expect_zero(std::string name, const RatFunc& f) {
  CheckResult c{std::move(name), f.is_zero(), -1, {}};
  c.detail = c.pass ? "polynomial residual is 0" : "residual " + f.str();
  return c;
}

CheckResult expect_true(std::string name, bool ok, std::string detail) {
  return CheckResult{std::move(name), ok, -1, std::move(detail)};
}

}  // namespace msp
