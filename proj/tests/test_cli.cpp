#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI with the given arguments; stderr is discarded.
Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + "'" RADII_LAB_CLI "' " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_path(const char* name) {
  return std::string(P_tmpdir) + "/radii_lab_cli_" + std::to_string(::getpid()) + "_" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("radius") {
  const Run r = run("radius --eq theo1");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["eq_id"] == "theo1");
  CHECK(std::abs(j["root"].get<double>() - 0.557384) < 5e-6);
  CHECK(j["expected"].get<double>() == 0.557384);
  CHECK(j["clamped"] == false);
  CHECK_FALSE(j.contains("closed_form"));

  const json t = json::parse(run("radius --eq theo --lambda 0.5 --json").out);
  CHECK(t["params"]["lambda"] == 0.5);
  CHECK(t["expected"].is_null());
  CHECK(t["root"].get<double>() < j["root"].get<double>());

  const json b = json::parse(run("radius --eq bohrG2").out);
  CHECK(b["closed_form"].get<double>() == doctest::Approx(std::sqrt(2.0) - 1).epsilon(1e-15));
  CHECK(b["root"].get<double>() == doctest::Approx(std::sqrt(2.0) - 1).epsilon(1e-11));

  CHECK(run("radius --eq nope").code == 2);
  CHECK(run("radius").code == 2);
  CHECK(run("radius --eq t1 --tol 1e-20").code == 2);
  CHECK(run("frobnicate").code == 2);
}

TEST_CASE("membership") {
  const Run k = run("membership --f koebe --order 128");
  REQUIRE(k.code == 0);
  const json j = json::parse(k.out);
  CHECK(j["schema"] == 1);
  CHECK(j["function"] == "koebe");
  CHECK(j["class"] == "M");
  CHECK(j["order"] == 128);
  CHECK(j["verdict"] == "certified_inside");
  CHECK(j["certificates"]["sum_sufficient"]["holds"] == true);
  CHECK(j["certificates"]["quartic_necessary"]["holds"] == true);

  const json c = json::parse(run("membership --f cexA --r 0.95 --order 128").out);
  CHECK(c["verdict"] == "certified_outside");
  CHECK(c["sup_sampled"].get<double>() > 1.0);

  const json f = json::parse(run("membership --f f1 --class OmegaA --order 128").out);
  CHECK(f["threshold"] == 0.5);
  CHECK(f["certificates"]["sum_sufficient"]["value"] == 0.5);
  CHECK(f["certificates"]["sum_sufficient"]["holds"] == true);

  CHECK(run("membership --f coeffs:1,x").code == 2);
  CHECK(run("membership --f koebe --class Q").code == 2);
  const Run open = run("membership --f coeffs:0.5 --order 64");
  CHECK(open.code == 3);
  CHECK(json::parse(open.out).contains("error"));
}

TEST_CASE("plot") {
  const std::string a = temp_path("a.csv");
  const std::string b = temp_path("b.csv");
  REQUIRE(run("plot --eq t1 --out '" + a + "'").code == 0);
  REQUIRE(run("plot --figure 3 --out '" + b + "' --json").code == 0);
  const std::string text = slurp(a);
  CHECK(text == slurp(b));
  CHECK(text.rfind("r,value\n0.001,", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 1000);

  const json j = json::parse(run("plot --figure 9 --rmin 0.5 --rmax 0.6 --step 0.05 --out '" + b + "' --json").out);
  CHECK(j["eq_id"] == "th9i");
  CHECK(j["rows"] == 3);

  CHECK(run("plot --eq t1 --rmin 0.6 --rmax 0.5 --out '" + a + "'").code == 2);
  CHECK(run("plot --figure 12 --out '" + a + "'").code == 2);
  CHECK(run("plot --out '" + a + "'").code == 2);
  CHECK(run("plot --eq t1 --out /nonexistent-dir/x.csv").code == 4);
  std::remove(a.c_str());
  std::remove(b.c_str());
}

TEST_CASE("verify-all") {
  const Run r = run("verify-all --json --order 128");
  const json j = json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["order"] == 128);
  bool all = true;
  for (const json& rec : j["records"]) all = all && rec["pass"].get<bool>();
  CHECK(j["pass"] == all);
  CHECK(r.code == (all ? 0 : 1));

  const Run text = run("verify-all --order 128");
  CHECK(text.code == r.code);
  CHECK(text.out.find("criterion 9") != std::string::npos);
}

TEST_CASE("order from the environment") {
  CHECK(json::parse(run("membership --f koebe", "RADII_LAB_ORDER=64").out)["order"] == 64);
  CHECK(json::parse(run("membership --f koebe --order 96", "RADII_LAB_ORDER=64").out)["order"] == 96);
  CHECK(run("membership --f koebe", "RADII_LAB_ORDER=2").code == 2);
}
