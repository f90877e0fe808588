#include "msp/suites.hpp"

#include <algorithm>

#include "msp/antideriv.hpp"
#include "msp/contributions.hpp"
#include "msp/hodge.hpp"
#include "msp/msp_series.hpp"
#include "msp/picard_fuchs.hpp"

namespace msp {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"pf",   "wronskian", "antideriv", "kseries",
                                              "eta",  "hodge",     "typeb",     "assembly"};
  return names;
}

namespace {

void need(int order, int min, const std::string& suite) {
  if (order < min)
    throw TruncationError("suite " + suite + " needs --order >= " + std::to_string(min));
}

}  // namespace

Report run_suite(const std::string& name, int order) {
  Report rep;
  rep.suite = name;
  if (name == "pf") {
    need(order, 1, name);
    rep.merge(check_picard_fuchs(order));
    rep.merge(check_msp_to_givental(order));
    rep.merge(check_special_geometry(order));
  } else if (name == "wronskian") {
    need(order, 1, name);
    rep.merge(check_b_relations(order));
    rep.merge(check_wronskian_identities(order));
  } else if (name == "antideriv") {
    need(order, 2, name);
    rep.merge(check_operator_factorization(order));
    rep.merge(check_antiderivatives(order));
  } else if (name == "kseries") {
    need(order, 1, name);
    rep.merge(check_msp_series(order));
  } else if (name == "eta") {
    need(order, 1, name);
    rep.merge(check_eta_coefficients(order));
    rep.merge(check_regularization(order));
    // The Hodge-side sums grow quickly with the order; q^6 is enough to see
    // every shape of term.
    int small = std::min(order, 6);
    MspContext ctx = build_msp_context(small);
    BiSeries Z = z6_star(ctx);
    for (int a = 0; a <= 2; ++a) rep.merge(check_formula1(Z, a, small));
    rep.merge(check_lemmX(small));
  } else if (name == "hodge") {
    rep.merge(check_hodge_numbers());
  } else if (name == "typeb") {
    need(order, 2, name);
    rep.merge(check_desired_identity(order));
    rep.merge(check_s_series(order));
  } else if (name == "assembly") {
    need(order, 1, name);
    rep.merge(check_assembly(order));
  } else {
    throw SeriesError("unknown suite: " + name);
  }
  return rep;
}

}  // namespace msp
