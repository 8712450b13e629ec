#include <cmath>
#include <vector>

#include "doctest.h"
#include "radii/error.hpp"
#include "radii/function_catalog.hpp"
#include "radii/series.hpp"

using namespace radii;

namespace {

// Binomial oracle: coefficients of (1 - z)^k.
std::vector<double> one_minus_z_pow(int k) {
  std::vector<double> c(k + 1);
  double binom = 1.0;
  for (int j = 0; j <= k; ++j) {
    c[j] = (j % 2 ? -1.0 : 1.0) * binom;
    binom = binom * (k - j) / (j + 1);
  }
  return c;
}

TruncatedSeries poly(std::vector<Complex> c, std::size_t order) {
  return TruncatedSeries::polynomial(std::move(c), order);
}

void check_coeffs(const TruncatedSeries& s, const std::vector<double>& expected, double tol = 1e-14) {
  for (std::size_t n = 0; n < expected.size(); ++n) {
    CAPTURE(n);
    CHECK(std::abs(s.coeff(n) - Complex(expected[n])) <= tol);
  }
}

}  // namespace

TEST_CASE("linear_combine") {
  const auto a = poly({1.0, 1.0}, 1);
  const auto b = poly({1.0, -1.0}, 1);
  check_coeffs(linear_combine(1.0, a, 1.0, b), {2.0, 0.0});

  const auto x = poly({1.0, 2.0, 3.0}, 5);
  const auto y = poly({4.0}, 5);
  check_coeffs(linear_combine(1.0, x, 0.0, y), {1.0, 2.0, 3.0, 0.0});

  // 0.5 (1-z)^2 + 0.5 (1-z): Koebe mixed with z/(1-z) on the z/f side.
  const auto koebe = poly({1.0, -2.0, 1.0}, 8);
  const auto half_plane = poly({1.0, -1.0}, 8);
  check_coeffs(linear_combine(0.5, koebe, 0.5, half_plane), {1.0, -1.5, 0.5, 0.0});

  SUBCASE("order is the minimum of the operands") {
    CHECK(linear_combine(1.0, poly({1.0}, 3), 1.0, poly({1.0}, 7)).order() == 3);
  }
}

TEST_CASE("mul") {
  check_coeffs(mul(poly({1.0, 1.0}, 4), poly({1.0, -1.0}, 4)), {1.0, 0.0, -1.0, 0.0});
  const auto sq = poly({1.0, -2.0, 1.0}, 10);
  check_coeffs(mul(sq, sq), one_minus_z_pow(4));
  check_coeffs(mul(mul(sq, sq), sq), one_minus_z_pow(6));
}

TEST_CASE("reciprocal") {
  const auto geo = reciprocal(poly({1.0, -1.0}, 20));
  for (std::size_t n = 0; n <= 20; ++n) CHECK(geo[n] == Complex(1.0));

  const auto k = reciprocal(poly({1.0, -2.0, 1.0}, 20));
  for (std::size_t n = 0; n <= 20; ++n) CHECK(std::abs(k[n] - Complex(n + 1.0)) < 1e-12);

  const auto a = reciprocal(poly({1.0, 2.0 / 3.0, 0.0, 1.0 / 3.0}, 10));
  check_coeffs(a, {1.0, -2.0 / 3.0, 4.0 / 9.0, -17.0 / 27.0}, 1e-15);

  CHECK_FALSE(reciprocal(poly({1.0, 1.0}, 4)).tail().has_value());
  CHECK_THROWS_AS(reciprocal(poly({1e-13, 1.0}, 4)), Error);
  try {
    reciprocal(poly({0.0, 1.0}, 4));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::near_zero_constant_term);
  }
}

TEST_CASE("derivative") {
  check_coeffs(derivative(poly({1.0}, 3)), {0.0, 0.0});
  check_coeffs(derivative(poly({0.0, 1.0, 0.5}, 6)), {1.0, 1.0, 0.0});
  check_coeffs(derivative(poly({1.0, -2.0, 1.0}, 6)), {-2.0, 2.0, 0.0});
  CHECK(derivative(poly({1.0}, 6)).order() == 5);
}

TEST_CASE("integrate_t_over_f") {
  const std::size_t N = 12;
  check_coeffs(integrate_t_over_f(catalog_function("identity", N)), {0.0, 1.0, 0.0, 0.0});
  check_coeffs(integrate_t_over_f(catalog_function("koebe", N)), {0.0, 1.0, -1.0, 1.0 / 3.0, 0.0});
  check_coeffs(integrate_t_over_f(catalog_function("z/(1-z)", N)), {0.0, 1.0, -0.5, 0.0});
  CHECK(integrate_t_over_f(catalog_function("koebe", N)).order() == N + 1);
}

TEST_CASE("dilate") {
  const std::size_t N = 16;
  const FunctionRep id = dilate(catalog_function("identity", N), 0.3);
  check_coeffs(id.z_over_f(), {1.0, 0.0, 0.0});

  const FunctionRep k = dilate(catalog_function("koebe", N), 0.5);
  check_coeffs(k.z_over_f(), {1.0, -1.0, 0.25, 0.0});

  const FunctionRep f1 = dilate(catalog_function("f1", N), 0.5);
  CHECK(std::abs(f1.a(2) - Complex(0.25)) < 1e-15);
  CHECK(std::abs(f1.a(3)) < 1e-15);

  CHECK_THROWS_AS(dilate(catalog_function("koebe", N), 1.0), Error);
  CHECK_THROWS_AS(dilate(catalog_function("koebe", N), 0.0), Error);

  SUBCASE("composition") {
    for (const std::string& name : catalog_names()) {
      const FunctionRep f = catalog_function(name, 64);
      const FunctionRep twice = dilate(dilate(f, 0.7), 0.6);
      const FunctionRep once = dilate(f, 0.42);
      for (std::size_t n = 0; n <= 64; ++n) {
        CAPTURE(name);
        CHECK(std::abs(twice.z_over_f()[n] - once.z_over_f()[n]) < 1e-12);
        CHECK(std::abs(twice.f_over_z()[n] - once.f_over_z()[n]) < 1e-12);
      }
    }
  }
}

TEST_CASE("eval_on_circle") {
  const auto z2 = TruncatedSeries::monomial(1.0, 2, 8);
  const CircleEvaluation e = eval_on_circle(z2, 0.3, 64);
  REQUIRE(e.values.size() == 64);
  for (const Complex& v : e.values) CHECK(std::abs(std::abs(v) - 0.09) < 1e-15);
  CHECK(e.tail_bound == 0.0);

  const auto q4 = poly({1.0, -4.0, 6.0, -4.0, 1.0}, 8);
  const CircleEvaluation h = eval_on_circle(q4, 0.5, 8);  // theta = pi is sample 4
  CHECK(std::abs(h.values[4] - Complex(5.0625)) < 1e-14);

  CHECK_THROWS_AS(eval_on_circle(q4, 0.5, 7), Error);
  CHECK_THROWS_AS(eval_on_circle(reciprocal(q4), 0.5, 16), Error);
  try {
    eval_on_circle(reciprocal(q4), 0.5, 16);
  } catch (const Error& e2) {
    CHECK(e2.code() == ErrorCode::tail_bound_unavailable);
  }

  SUBCASE("max modulus is dominated by the absolute sum plus tail") {
    for (const std::string& name : catalog_names()) {
      const FunctionRep f = catalog_function(name, 256);
      for (int k = 1; k <= 9; ++k) {
        const double r = k / 10.0;
        for (const TruncatedSeries* s : {&f.f_over_z(), &f.z_over_f()}) {
          const CircleEvaluation c = eval_on_circle(*s, r, 512);
          CAPTURE(name);
          CAPTURE(r);
          CHECK(c.max_modulus() <= s->abs_sum(r) + c.tail_bound + 1e-12);
        }
      }
    }
  }
}

TEST_CASE("majorant tail sums against brute force") {
  const Majorant m = Majorant::geometric(1.0, 1.0, 1.0);  // (n+1)
  double brute = 0.0;
  for (int n = 11; n < 2000; ++n) brute += (n + 1.0) * std::pow(0.5, n);
  CHECK(m.tail_sum(11, 0.5) == doctest::Approx(brute).epsilon(1e-12));
  CHECK(m.tail_sum(11, 0.5) >= brute);

  const Majorant g = Majorant::geometric(2.0, 0.0, 0.5);
  CHECK(g.tail_sum(0, 1.0) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(std::isinf(Majorant::geometric(1.0, 0.0, 1.0).tail_sum(5, 1.0)));
  CHECK(Majorant::zero().tail_sum(3, 0.9) == 0.0);

  SUBCASE("covering dominates the covered value") {
    const Majorant c = Majorant::geometric(1.0, 0.0, 0.5).covering(10, 3.0);
    CHECK(c.at(10) >= 3.0 * (1 - 1e-12));
    for (std::size_t n = 11; n < 40; ++n) CHECK(c.at(n) >= std::pow(0.5, n));
  }
}

TEST_CASE("series invariants over the catalog") {
  for (const std::string& name : catalog_names()) {
    CAPTURE(name);
    const FunctionRep f = catalog_function(name, 128);
    const TruncatedSeries prod = mul(reciprocal(f.f_over_z()), f.f_over_z());
    for (std::size_t n = 0; n < 128; ++n) CHECK(std::abs(prod[n] - Complex(n == 0 ? 1.0 : 0.0)) < 1e-10);
    CHECK(duality_defect(f) < 1e-10);

    const TruncatedSeries& a = f.f_over_z();
    const TruncatedSeries& b = f.z_over_f();
    const TruncatedSeries lhs = derivative(mul(a, b));
    const TruncatedSeries rhs = linear_combine(1.0, mul(derivative(a), b), 1.0, mul(a, derivative(b)));
    for (std::size_t n = 0; n + 2 <= 128; ++n) CHECK(std::abs(lhs[n] - rhs[n]) < 1e-10);
  }
}

TEST_CASE("function representation") {
  const FunctionRep k = catalog_function("koebe", 10);
  CHECK(k.b(1) == Complex(-2.0));
  CHECK(k.b(2) == Complex(1.0));
  CHECK(k.a(1) == Complex(1.0));
  CHECK(k.a(4) == Complex(4.0));
  CHECK(std::abs(k(Complex(0.5)) - Complex(2.0)) < 1e-2);  // truncated at order 10

  const auto fz = poly({1.0, 1.0}, 6);
  const auto wrong = poly({1.0, 1.0}, 6);
  CHECK_THROWS_AS(FunctionRep::from_pair(fz, wrong), Error);
  CHECK_NOTHROW(FunctionRep::from_pair(fz, reciprocal(fz)));
}
