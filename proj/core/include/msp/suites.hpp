#pragma once

#include <string>
#include <vector>

#include "msp/report.hpp"

namespace msp {

// Suite names accepted by run_suite, without "all".
const std::vector<std::string>& suite_names();

// Runs one named group of checks at the given q-order. Throws SeriesError for
// an unknown name and TruncationError when the order is too small.
Report run_suite(const std::string& name, int order);

}  // namespace msp
