#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include <unistd.h>

#include "doctest.h"
#include "radii_lab.h"

namespace {

std::string temp_path(const char* name) {
  return std::string(P_tmpdir) + "/radii_lab_capi_" + std::to_string(::getpid()) + "_" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Fn {
  rl_function* f = nullptr;
  explicit Fn(const char* spec, size_t order = 128) { REQUIRE(rl_function_parse(spec, order, &f, nullptr) == RL_OK); }
  ~Fn() { rl_function_free(f); }
};

}  // namespace

TEST_CASE("status names and errors") {
  CHECK(std::string(rl_status_name(RL_OK)) == "Ok");
  CHECK(std::string(rl_status_name(RL_ERR_PARSE)) == "ParseError");
  CHECK(std::string(rl_status_name(RL_ERR_NULL_ARGUMENT)) == "NullArgument");

  CHECK(rl_default_order(nullptr) == RL_ERR_NULL_ARGUMENT);
  CHECK(std::strlen(rl_last_error()) > 0);
  size_t order = 0;
  REQUIRE(rl_default_order(&order) == RL_OK);
  CHECK(order >= 4);
}

TEST_CASE("functions") {
  CHECK(rl_catalog_count() == 13);
  CHECK(std::string(rl_catalog_name(1)) == "koebe");
  CHECK(rl_catalog_name(13) == nullptr);

  Fn k("koebe", 32);
  CHECK(rl_function_order(k.f) == 32);
  double re = 0, im = 0;
  REQUIRE(rl_function_coeff(k.f, RL_SIDE_F_OVER_Z, 3, &re, &im) == RL_OK);
  CHECK(re == 4.0);
  CHECK(im == 0.0);
  REQUIRE(rl_function_coeff(k.f, RL_SIDE_Z_OVER_F, 1, &re, &im) == RL_OK);
  CHECK(re == -2.0);
  REQUIRE(rl_function_coeff(k.f, RL_SIDE_Z_OVER_F, 1000, &re, &im) == RL_OK);
  CHECK(re == 0.0);

  size_t needed = 0;
  char tiny[3];
  CHECK(rl_function_text(k.f, tiny, sizeof tiny, &needed) == RL_ERR_BUFFER_TOO_SMALL);
  CHECK(needed == 6);
  CHECK(rl_function_text(k.f, nullptr, 0, &needed) == RL_ERR_BUFFER_TOO_SMALL);
  char buf[16];
  REQUIRE(rl_function_text(k.f, buf, sizeof buf, &needed) == RL_OK);
  CHECK(std::string(buf) == "koebe");

  rl_function* bad = reinterpret_cast<rl_function*>(1);
  size_t pos = 99;
  CHECK(rl_function_parse("coeffs:1,q", 32, &bad, &pos) == RL_ERR_PARSE);
  CHECK(bad == nullptr);
  CHECK(pos == 9);
  CHECK(std::string(rl_last_error()).find("position 9") != std::string::npos);
  CHECK(rl_function_parse(nullptr, 32, &bad, nullptr) == RL_ERR_NULL_ARGUMENT);
  CHECK(rl_function_parse("koebe", 0, &bad, nullptr) == RL_ERR_ARGUMENT_OUT_OF_RANGE);
  CHECK(rl_function_coeff(nullptr, RL_SIDE_F_OVER_Z, 0, &re, &im) == RL_ERR_NULL_ARGUMENT);
  rl_function_free(nullptr);
  CHECK(rl_function_order(nullptr) == 0);
}

TEST_CASE("radius equations") {
  CHECK(rl_equation_count() == 17);
  CHECK(rl_equation_id(17) == nullptr);
  CHECK(std::string(rl_figure_equation(3)) == "t1");
  CHECK(rl_figure_equation(0) == nullptr);

  const rl_params p = rl_params_default();
  CHECK(p.lambda == 1.0);
  CHECK(p.lambda2 == 1.0);
  CHECK(p.mu == 1.0);

  double v = 0;
  REQUIRE(rl_eval_equation("bohrG2", &p, 0.5, &v) == RL_OK);
  CHECK(v == doctest::Approx(0.25));
  REQUIRE(rl_eval_equation("bohrG2", nullptr, 0.5, &v) == RL_OK);
  CHECK(rl_eval_equation("nope", &p, 0.5, &v) == RL_ERR_UNKNOWN_EQUATION);
  CHECK(rl_eval_equation("t1", &p, 1.5, &v) == RL_ERR_PARAM_OUT_OF_RANGE);

  rl_root root{};
  REQUIRE(rl_solve_radius("theo1", &p, 1e-12, &root) == RL_OK);
  CHECK(std::abs(root.root - 0.557384) < 5e-6);
  CHECK(root.lo <= root.root);
  CHECK(root.root <= root.hi);
  CHECK(root.clamped == 0);
  CHECK(rl_solve_radius("theo1", &p, 1e-16, &root) == RL_ERR_PARAM_OUT_OF_RANGE);
  CHECK(rl_solve_radius("theo1", &p, 1e-12, nullptr) == RL_ERR_NULL_ARGUMENT);

  double cf = 0;
  REQUIRE(rl_closed_form_radius("bohrG2", nullptr, &cf) == RL_OK);
  CHECK(cf == doctest::Approx(std::sqrt(2.0) - 1));
  CHECK(rl_closed_form_radius("t1", nullptr, &cf) == RL_ERR_NO_CLOSED_FORM);

  int has = -1;
  double expected = 0, tol = 0;
  REQUIRE(rl_expected_root("t1", &has, &expected, &tol) == RL_OK);
  CHECK(has == 1);
  CHECK(expected == 0.294876);
  CHECK(tol == 5e-5);
  REQUIRE(rl_expected_root("bohrG1", &has, &expected, &tol) == RL_OK);
  CHECK(has == 0);
}

TEST_CASE("membership and Bohr") {
  Fn k("koebe");
  rl_defect_report d{};
  REQUIRE(rl_sup_defect(k.f, "M", 1.0, 0.99, 512, &d) == RL_OK);
  CHECK(d.verdict == RL_CERTIFIED_INSIDE);
  CHECK(d.threshold == 1.0);
  CHECK(std::string(rl_verdict_name(d.verdict)) == "certified_inside");
  CHECK(rl_sup_defect(k.f, "Q", 1.0, 0.5, 512, &d) == RL_ERR_PARSE);

  Fn cex("cexA");
  REQUIRE(rl_sup_defect(cex.f, "M", 1.0, 0.95, 512, &d) == RL_OK);
  CHECK(d.verdict == RL_CERTIFIED_OUTSIDE);

  rl_certificate c{};
  REQUIRE(rl_quartic_necessary(k.f, &c) == RL_OK);
  CHECK(c.holds == 1);
  REQUIRE(rl_certificate_sufficient(k.f, "M", 1.0, &c) == RL_OK);
  CHECK(c.value == doctest::Approx(1.0));
  CHECK(rl_certificate_sufficient(k.f, "P", 1.0, &c) == RL_ERR_UNSUPPORTED_CLASS);
  REQUIRE(rl_area_functional(k.f, 1.0, &c) == RL_OK);

  Fn f1("f1");
  rl_bohr_report b{};
  REQUIRE(rl_bohr(f1.f, RL_BOHR, std::sqrt(2.0) - 1, 0.0, &b) == RL_OK);
  CHECK(b.satisfied == 1);
  CHECK(b.distance_bound == 0.5);
  REQUIRE(rl_bohr(f1.f, RL_IMPROVED, 0.3, 0.0, &b) == RL_OK);
  CHECK(b.satisfied == 0);
  CHECK(rl_bohr(k.f, RL_ROGOSINSKI, 0.1, 0.0, &b) == RL_ERR_NOT_CERTIFIED_OMEGA_A);
}

TEST_CASE("plot files") {
  const std::string path = temp_path("plot.csv");
  size_t rows = 0;
  REQUIRE(rl_plot_csv("bohrG2", nullptr, 0.25, 0.5, 0.25, path.c_str(), &rows) == RL_OK);
  CHECK(rows == 2);
  CHECK(slurp(path) == "r,value\n0.25,-0.4375\n0.5,0.25\n");
  std::remove(path.c_str());

  CHECK(rl_plot_csv("bohrG2", nullptr, 0.5, 0.25, 0.25, path.c_str(), &rows) == RL_ERR_ARGUMENT_OUT_OF_RANGE);
  CHECK(rl_plot_csv("nope", nullptr, 0.1, 0.5, 0.1, path.c_str(), &rows) == RL_ERR_UNKNOWN_EQUATION);
  CHECK(rl_plot_csv("t1", nullptr, 0.1, 0.5, 0.1, "/nonexistent-dir/x.csv", &rows) == RL_ERR_IO);
}

TEST_CASE("verification handle") {
  rl_verification* v = nullptr;
  REQUIRE(rl_verify_all(128, &v) == RL_OK);
  const size_t n = rl_verification_count(v);
  CHECK(n > 100);
  rl_record r{};
  REQUIRE(rl_verification_record(v, 0, &r) == RL_OK);
  CHECK(std::string(r.id).rfind("c1/", 0) == 0);
  CHECK(r.criterion == 1);
  CHECK(rl_verification_record(v, n, &r) == RL_ERR_ARGUMENT_OUT_OF_RANGE);
  for (size_t i = 0; i < n; ++i) {
    REQUIRE(rl_verification_record(v, i, &r) == RL_OK);
    const std::string cmp = r.comparison;
    CHECK((cmp == "equal" || cmp == "at_most" || cmp == "greater_than"));
  }
  rl_verification_free(v);
  CHECK(rl_verification_count(nullptr) == 0);
  CHECK(std::string(rl_criterion_title(1)).size() > 0);
  CHECK(rl_criterion_title(10) == nullptr);
}
