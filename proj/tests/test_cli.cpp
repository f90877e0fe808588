#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  static int counter = 0;
  std::string path = "cli_out_" + std::to_string(counter++) + ".txt";
  std::string cmd = std::string(MSP_CLI_PATH) + " " + args + " > " + path + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  std::remove(path.c_str());
  return r;
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run("--order 4 check --suite pf").code == 0);
  CHECK(run("check --suite bogus").code == 2);
  CHECK(run("--order 6 gw --genus 2 --dmax 1").code == 2);
  CHECK(run("--order 4 gw --genus 1 --dmax 3").code == 2);
  CHECK(run("--order 0 check --suite pf").code == 2);
  CHECK(run("--order 1 check --suite antideriv").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("genus-zero table") {
  Run r = run("--order 5 gw --genus 0 --dmax 3");
  REQUIRE(r.code == 0);
  CHECK(contains(r.out, "N_{0,1} = 2875\n"));
  CHECK(contains(r.out, "N_{0,2} = 4876875/8\n"));
  CHECK(contains(r.out, "N_{0,3} = 8564575000/27\n"));
}

TEST_CASE("genus-one table") {
  Run r = run("--order 3 gw --genus 1 --dmax 1");
  REQUIRE(r.code == 0);
  CHECK(r.out == "N_{1,1} = 2875/12\n");
  Run c = run("--order 4 --format csv gw --genus 1 --dmax 2");
  REQUIRE(c.code == 0);
  CHECK(c.out == "d,value\n1,2875/12\n2,407125/8\n");
}

TEST_CASE("series dumps") {
  CHECK(run("--order 2 series --name I0").out == "1, 120, 113400\n");
  CHECK(run("--order 1 series --name contribD").out == "0, 1024\n");
  CHECK(run("--order 1 series --name K21").out == "0, 600\n");
  Run eta = run("--order 1 series --name eta");
  CHECK(contains(eta.out, "t'^0: 0, 770\n"));
  CHECK(contains(eta.out, "t'^1: 0, 3005\n"));
  CHECK(run("--order 2 series --name nothing").code == 2);
}

TEST_CASE("json output") {
  Run r = run("--order 5 --format json gw --genus 0 --dmax 2");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["genus"] == 0);
  REQUIRE(j["invariants"].size() == 2);
  CHECK(j["invariants"][0]["d"] == 1);
  CHECK(j["invariants"][0]["value"] == "2875");
  CHECK(j["invariants"][1]["value"] == "4876875/8");

  Run c = run("--order 3 --format json check --suite kseries");
  REQUIRE(c.code == 0);
  auto k = nlohmann::json::parse(c.out);
  CHECK(k["pass"] == true);
  CHECK(k["order"] == 3);
  REQUIRE(k["suites"].size() == 1);
  const auto& s = k["suites"][0];
  CHECK(s["suite"] == "kseries");
  CHECK(s["values"]["K12[q^1]"] == "3850");
  for (const auto& chk : s["checks"]) {
    CHECK(chk.contains("name"));
    CHECK(chk["pass"] == true);
    CHECK(chk["first_bad_degree"].is_null());
  }

  Run s2 = run("--order 2 --format json series --name I1");
  auto js = nlohmann::json::parse(s2.out);
  CHECK(js["name"] == "I1");
  CHECK(js["parts"][1]["t"] == 1);
  CHECK(js["parts"][1]["coeffs"][1] == "120");
}

TEST_CASE("output file and determinism") {
  Run a = run("--order 4 --format json check --suite hodge");
  Run b = run("--order 4 --format json check --suite hodge");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run("--order 3 --out cli_file.txt series --name g1").code == 0);
  std::ifstream in("cli_file.txt");
  std::string line;
  std::getline(in, line);
  CHECK(line == "0, 120, 170100, 308308000");
  std::remove("cli_file.txt");
}

TEST_CASE("order from the environment") {
  Run r = run("series --name I0 --order 1");
  CHECK(r.out == "1, 120\n");
  std::string cmd = std::string("MSP_ORDER=2 ") + MSP_CLI_PATH + " series --name I0 > env_out.txt";
  REQUIRE(std::system(cmd.c_str()) == 0);
  std::ifstream in("env_out.txt");
  std::string line;
  std::getline(in, line);
  CHECK(line == "1, 120, 113400");
  std::remove("env_out.txt");
}
