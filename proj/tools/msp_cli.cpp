// Command-line front end: identity suites, invariant tables and series dumps.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "msp/contributions.hpp"
#include "msp/msp_series.hpp"
#include "msp/suites.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int default_order() {
  if (const char* env = std::getenv("MSP_ORDER")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      std::cerr << "ignoring malformed MSP_ORDER=" << env << "\n";
    }
  }
  return 12;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string r = "\"";
  for (char c : s) {
    if (c == '"') r += '"';
    r += c;
  }
  return r + "\"";
}

std::vector<std::string> coeff_strings(const msp::QSeries& f) {
  std::vector<std::string> r;
  for (int d = 0; d <= f.order(); ++d) r.push_back(msp::to_string(f[d]));
  return r;
}

// A named series, split into labelled parts (t-degree or t'-degree).
struct Dump {
  std::string name;
  std::string part_label;  // "t", "t'" or empty for a plain q-series
  std::vector<std::pair<int, msp::QSeries>> parts;
};

Dump dump_q(const std::string& name, const msp::QSeries& f);

Dump dump_log(const std::string& name, const msp::LogSeries& f) {
  if (f.is_t_free()) return dump_q(name, f.part(0));
  Dump d{name, "t", {}};
  for (int j = 0; j <= std::max(f.tdeg(), 0); ++j) d.parts.emplace_back(j, f.part(j));
  return d;
}

Dump dump_q(const std::string& name, const msp::QSeries& f) { return Dump{name, "", {{0, f}}}; }

Dump dump_tq(const std::string& name, const msp::TQSeries& f) {
  Dump d{name, "t'", {}};
  for (int j = 0; j <= msp::kTPrimeDeg; ++j) d.parts.emplace_back(j, msp::coe_tprime(f, j));
  return d;
}

Dump make_dump(const std::string& name, int order) {
  using namespace msp;
  MspContext ctx = build_msp_context(order);
  if (name.size() == 2 && name[0] == 'I') return dump_log(name, ctx.I[name[1] - '0']);
  if (name == "mirror") return dump_log(name, ctx.M.T);
  if (name == "Tprime") return dump_q(name, ctx.M.Tp);
  if (name == "yukawa") return dump_q(name, ctx.M.FTTT);
  if (name == "g1") return dump_q(name, ctx.I.g1);
  if (name == "eta") return dump_tq(name, regularize(z6_star(ctx)).eta);
  if (name == "K12") return dump_q(name, k_series(ctx, 1, 2));
  if (name == "K21") return dump_q(name, k_series(ctx, 2, 1));
  if (name == "contribA") return dump_q(name, contrib_A_remainder(ctx));
  if (name == "contribB") return dump_q(name, contrib_B(ctx));
  if (name == "contribC") return dump_q(name, contrib_C(ctx));
  if (name == "contribD") return dump_q(name, contrib_D(ctx));
  if (name == "F1") return dump_q(name, assemble(ctx).F1);
  throw SeriesError("unknown series: " + name);
}

void print_dump(std::ostream& out, const Dump& d, const std::string& format, int order) {
  if (format == "json") {
    json j;
    j["name"] = d.name;
    j["order"] = order;
    if (d.part_label.empty()) {
      j["coeffs"] = coeff_strings(d.parts.front().second);
    } else {
      json parts = json::array();
      for (const auto& [k, f] : d.parts) parts.push_back({{d.part_label, k}, {"coeffs", coeff_strings(f)}});
      j["parts"] = parts;
    }
    out << j.dump(2) << "\n";
  } else if (format == "csv") {
    out << (d.part_label.empty() ? "" : "part,") << "d,value\n";
    for (const auto& [k, f] : d.parts)
      for (int q = 0; q <= f.order(); ++q)
        out << (d.part_label.empty() ? "" : d.part_label + "^" + std::to_string(k) + ",") << q << ","
            << msp::to_string(f[q]) << "\n";
  } else {
    for (const auto& [k, f] : d.parts) {
      if (!d.part_label.empty()) out << d.part_label << "^" << k << ": ";
      auto c = coeff_strings(f);
      for (size_t i = 0; i < c.size(); ++i) out << (i ? ", " : "") << c[i];
      out << "\n";
    }
  }
}

void print_reports(std::ostream& out, const std::vector<msp::Report>& reps, const std::string& format, int order) {
  if (format == "json") {
    json j;
    j["order"] = order;
    bool all = true;
    json suites = json::array();
    for (const auto& r : reps) {
      json s;
      s["suite"] = r.suite;
      s["pass"] = r.ok();
      json checks = json::array();
      for (const auto& c : r.checks) {
        json cj{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
        cj["first_bad_degree"] = c.first_bad_degree < 0 ? json(nullptr) : json(c.first_bad_degree);
        checks.push_back(cj);
      }
      s["checks"] = checks;
      json values = json::object();
      for (const auto& [k, v] : r.values) values[k] = v;
      s["values"] = values;
      suites.push_back(s);
      all = all && r.ok();
    }
    j["suites"] = suites;
    j["pass"] = all;
    out << j.dump(2) << "\n";
  } else if (format == "csv") {
    out << "suite,check,status,first_bad_degree,detail\n";
    for (const auto& r : reps)
      for (const auto& c : r.checks)
        out << r.suite << "," << csv_field(c.name) << "," << (c.pass ? "PASS" : "FAIL") << ","
            << (c.first_bad_degree < 0 ? "" : std::to_string(c.first_bad_degree)) << "," << csv_field(c.detail)
            << "\n";
  } else {
    for (const auto& r : reps) {
      int passed = 0;
      for (const auto& c : r.checks) {
        out << (c.pass ? "PASS " : "FAIL ") << r.suite << ": " << c.name;
        if (!c.detail.empty()) out << " (" << c.detail << ")";
        out << "\n";
        passed += c.pass;
      }
      for (const auto& [k, v] : r.values) out << "  " << k << " = " << v << "\n";
      out << r.suite << ": " << passed << "/" << r.checks.size() << " passed\n";
    }
  }
}

void print_invariants(std::ostream& out, int genus, const std::vector<msp::Rat>& v, const std::string& format) {
  if (format == "json") {
    json inv = json::array();
    for (size_t i = 0; i < v.size(); ++i) inv.push_back({{"d", i + 1}, {"value", msp::to_string(v[i])}});
    json j{{"genus", genus}, {"invariants", inv}};
    out << j.dump(2) << "\n";
  } else if (format == "csv") {
    out << "d,value\n";
    for (size_t i = 0; i < v.size(); ++i) out << i + 1 << "," << msp::to_string(v[i]) << "\n";
  } else {
    for (size_t i = 0; i < v.size(); ++i) out << "N_{" << genus << "," << i + 1 << "} = " << msp::to_string(v[i]) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact genus-one computations on the quintic"};
  app.require_subcommand(1);

  int order = default_order();
  std::string format = "plain";
  std::string out_path;
  app.add_option("--order", order, "q-truncation order (default from MSP_ORDER, else 12)")
      ->check(CLI::Range(1, 64));
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"plain", "json", "csv"}));
  app.add_option("--out", out_path, "write output to this file instead of stdout");

  std::string suite;
  std::vector<std::string> suite_choices = msp::suite_names();
  suite_choices.push_back("all");
  auto* check = app.add_subcommand("check", "run identity suites");
  check->fallthrough();
  check->add_option("--suite", suite, "suite to run")->required()->check(CLI::IsMember(suite_choices));

  int genus = 0, dmax = 3;
  auto* gw = app.add_subcommand("gw", "Gromov-Witten invariants N_{g,d}");
  gw->fallthrough();
  gw->add_option("--genus", genus, "0 or 1")->required();
  gw->add_option("--dmax", dmax, "largest degree")->check(CLI::PositiveNumber);

  std::string name;
  auto* series = app.add_subcommand("series", "dump a named series");
  series->fallthrough();
  series
      ->add_option("--name", name, "series name")
      ->required()
      ->check(CLI::IsMember({"I0", "I1", "I2", "I3", "mirror", "Tprime", "yukawa", "g1", "eta", "K12", "K21",
                             "contribA", "contribB", "contribC", "contribD", "F1"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  if (order < 1) {
    std::cerr << "--order must be at least 1\n";
    return kExitUsage;
  }

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      std::cerr << "cannot open " << out_path << "\n";
      return kExitUsage;
    }
  }
  std::ostream& out = out_path.empty() ? std::cout : file;

  try {
    if (*check) {
      std::vector<msp::Report> reps;
      if (suite == "all")
        for (const auto& s : msp::suite_names()) reps.push_back(msp::run_suite(s, order));
      else
        reps.push_back(msp::run_suite(suite, order));
      print_reports(out, reps, format, order);
      for (const auto& r : reps)
        if (!r.ok()) return kExitFail;
      return kExitOk;
    }
    if (*gw) {
      if (genus != 0 && genus != 1) {
        std::cerr << "only genus 0 and 1 are supported\n";
        return kExitUsage;
      }
      if (dmax > order - 2) {
        std::cerr << "--dmax must be at most order - 2 = " << order - 2 << "; raise --order\n";
        return kExitUsage;
      }
      std::vector<msp::Rat> v;
      if (genus == 0)
        v = msp::genus0_invariants(msp::build_mirror(msp::build_ifunctions(order)), dmax);
      else
        v = msp::genus1_invariants(order, dmax);
      print_invariants(out, genus, v, format);
      return kExitOk;
    }
    if (*series) {
      print_dump(out, make_dump(name, order), format, order);
      return kExitOk;
    }
  } catch (const msp::TruncationError& e) {
    std::cerr << "truncation: " << e.what() << "; raise --order\n";
    return kExitUsage;
  } catch (const msp::SeriesError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
