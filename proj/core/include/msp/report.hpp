#pragma once

#include <string>
#include <utility>
#include <vector>

#include "msp/bi_series.hpp"
#include "msp/log_series.hpp"
#include "msp/rat_func.hpp"

namespace msp {

struct CheckResult {
  std::string name;
  bool pass = false;
  int first_bad_degree = -1;  // -1 when passing or not degree-based
  std::string detail;
};

struct Report {
  std::string suite;
  std::vector<CheckResult> checks;
  // Named exact values worth showing alongside the checks.
  std::vector<std::pair<std::string, std::string>> values;

  bool ok() const;
  void add(CheckResult c) { checks.push_back(std::move(c)); }
  void note(std::string key, std::string value) { values.emplace_back(std::move(key), std::move(value)); }
  void merge(const Report& other);
};

CheckResult expect_equal(std::string name, const QSeries& a, const QSeries& b);
CheckResult expect_equal(std::string name, const TQSeries& a, const TQSeries& b);
CheckResult expect_equal(std::string name, const LogSeries& a, const LogSeries& b);
CheckResult expect_equal(std::string name, const BiSeries& a, const BiSeries& b);
CheckResult expect_zero(std::string name, const RatFunc& f);
CheckResult expect_true(std::string name, bool ok, std::string detail = {});

}  // namespace msp
