#include <cmath>
#include <numbers>

#include "doctest.h"
#include "radii/class_operators.hpp"
#include "radii/error.hpp"
#include "radii/function_catalog.hpp"
#include "radii/transforms.hpp"

using namespace radii;

namespace {

constexpr std::size_t N = 256;
const ClassId kM{ClassTag::M, 1.0};

void check_prefix(const TruncatedSeries& s, std::initializer_list<double> expected, double tol = 1e-13) {
  std::size_t n = 0;
  for (double e : expected) {
    CAPTURE(n);
    CHECK(std::abs(s[n] - Complex(e)) <= tol);
    ++n;
  }
}

double max_diff(const TruncatedSeries& a, const TruncatedSeries& b) {
  double d = 0.0;
  for (std::size_t n = 0; n <= std::min(a.order(), b.order()); ++n) d = std::max(d, std::abs(a[n] - b[n]));
  return d;
}

FunctionRep seeded_member(std::uint64_t seed, double lambda = 1.0) {
  const Complex b1 = std::polar(0.5 * static_cast<double>(1 + seed % 3), 1.1 * static_cast<double>(seed));
  return generate_M_member(seeded_schwarz_function(seed, 2, 8, N), lambda, b1);
}

}  // namespace

TEST_CASE("omitted_value") {
  check_prefix(omitted_value(catalog_function("koebe", N), 1.0).z_over_f(), {1.0, -3.0, 1.0, 0.0});
  check_prefix(omitted_value(catalog_function("identity", N), 2.0).z_over_f(), {1.0, -0.5, 0.0});
  CHECK_THROWS_AS(omitted_value(catalog_function("koebe", N), 0.0), Error);

  SUBCASE("defects for M, U and P are untouched") {
    for (const std::string& name : catalog_names()) {
      const FunctionRep f = catalog_function(name, N);
      for (Complex a : {Complex(1.0), Complex(-0.25), Complex(0.0, 2.0)}) {
        const FunctionRep g = omitted_value(f, a);
        for (ClassTag tag : {ClassTag::M, ClassTag::U, ClassTag::P}) {
          CAPTURE(name);
          CHECK(max_diff(defect_series(g, {tag, 1.0}), defect_series(f, {tag, 1.0})) <= 1e-14);
        }
      }
    }
  }
}

TEST_CASE("forbidden_point") {
  const ForbiddenPoint k = forbidden_point(catalog_function("koebe", N), 0.0, 1.0);
  CHECK(k.point == Complex(-0.5));
  CHECK(k.omitted_on_grid);
  CHECK(k.min_distance > 0.0);  // -1/2 lies on the omitted slit

  const ForbiddenPoint id = forbidden_point(catalog_function("identity", N), 0.5, 0.5);
  CHECK(id.point == Complex(-2.0));
  CHECK(id.omitted_on_grid);
  CHECK(id.min_distance == doctest::Approx(1.001).epsilon(1e-9));

  const FunctionRep member = seeded_member(5, 0.5);
  const ForbiddenPoint m = forbidden_point(member, 0.3, 0.5);
  CHECK(m.omitted_on_grid);

  SUBCASE("generated members for several lambda") {
    for (double lambda : {0.5, 0.8, 1.0}) {
      for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        const Complex mu = std::polar(1.0 - lambda, 0.8 * static_cast<double>(seed));
        CAPTURE(lambda);
        CAPTURE(seed);
        CHECK(forbidden_point(seeded_member(seed, lambda), mu, lambda).omitted_on_grid);
      }
    }
  }

  SUBCASE("errors") {
    try {
      forbidden_point(catalog_function("identity", N), 0.0, 1.0);
      FAIL("expected ZeroDenominator");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::zero_denominator);
    }
    CHECK_THROWS_AS(forbidden_point(catalog_function("koebe", N), 0.6, 0.5), Error);
    CHECK_THROWS_AS(forbidden_point(catalog_function("koebe", N), 0.0, 1.5), Error);
  }
}

TEST_CASE("harmonic_combination") {
  const FunctionRep k = catalog_function("koebe", N);
  const FunctionRep h = catalog_function("z/(1-z)", N);
  CHECK(max_diff(harmonic_combination(k, h, 0.0).z_over_f(), h.z_over_f()) == 0.0);
  CHECK(max_diff(harmonic_combination(k, h, 1.0).z_over_f(), k.z_over_f()) == 0.0);
  CHECK(max_diff(harmonic_combination(k, k, 0.37).z_over_f(), k.z_over_f()) <= 1e-15);

  const FunctionRep mix = harmonic_combination(k, h, 0.5);
  const TruncatedSeries d = defect_series(mix, kM);
  check_prefix(d, {0.0, 0.0, 0.5, 0.0, 0.0});
  CHECK(sup_defect(mix, kM, 0.99).verdict == Verdict::certified_inside);
  CHECK_THROWS_AS(harmonic_combination(k, h, 1.5), Error);

  SUBCASE("defect linearity over the t grid for generated members") {
    const FunctionRep f = seeded_member(11);
    const FunctionRep g = seeded_member(12);
    for (int i = 0; i <= 10; ++i) {
      const double t = i / 10.0;
      const FunctionRep F = harmonic_combination(f, g, t);
      const TruncatedSeries expect = linear_combine(1.0 - t, defect_series(g, kM), t, defect_series(f, kM));
      CHECK(max_diff(defect_series(F, kM), expect) <= 1e-12);
      CHECK(sup_defect(F, kM, 0.99, 1024).verdict == Verdict::certified_inside);
    }
  }
}

TEST_CASE("quotient_product") {
  const FunctionRep id = catalog_function("identity", N);
  check_prefix(quotient_product(id, id).z_over_f(), {1.0, 0.0, 0.0});

  const FunctionRep k = catalog_function("koebe", N);
  const FunctionRep kk = quotient_product(k, k);
  check_prefix(kk.z_over_f(), {1.0, -4.0, 6.0, -4.0, 1.0, 0.0});
  check_prefix(defect_series(kk, kM), {0.0, 0.0, 6.0, -16.0, 9.0, 0.0});

  check_prefix(quotient_product(k, catalog_function("z/(1-z)", N)).z_over_f(), {1.0, -3.0, 3.0, -1.0, 0.0});

  SUBCASE("radius 0.29 for generated members, sharp side for Koebe") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const FunctionRep F = quotient_product(seeded_member(seed), seeded_member(seed + 100));
      const DefectReport d = sup_defect(F, kM, 0.29, 1024);
      CHECK(d.sup_sampled <= 1.0 + d.tail_bound);
    }
    CHECK(sup_defect(kk, kM, 0.32).sup_sampled > 1.0);
  }
}

TEST_CASE("square_over") {
  check_prefix(square_over(catalog_function("identity", N)).z_over_f(), {1.0, 0.0});

  const FunctionRep F = square_over(catalog_function("koebe", N));
  check_prefix(F.z_over_f(), {1.0, 2.0, 3.0, 4.0, 5.0});
  check_prefix(F.f_over_z(), {1.0, -2.0, 1.0, 0.0});
  for (double r : {0.1, 0.2, 0.25}) {
    const double closed = (3 * r * r + 4 * r * r * r - std::pow(r, 4)) / std::pow(1 - r, 4);
    CHECK(sup_defect(F, kM, r).sup_sampled == doctest::Approx(closed).epsilon(1e-12));
  }

  const FunctionRep G = square_over(catalog_function("z/(1-z)", N));
  for (double r : {0.1, 0.3}) {
    const double closed = r * r * (1 + r) / std::pow(1 - r, 3);
    CHECK(sup_defect(G, kM, r).sup_sampled == doctest::Approx(closed).epsilon(1e-12));
  }
}

TEST_CASE("square_over_integral") {
  check_prefix(square_over_integral(catalog_function("identity", N)).z_over_f(), {1.0, 0.0, 0.0});

  const FunctionRep F = square_over_integral(catalog_function("koebe", N));
  check_prefix(F.z_over_f(), {1.0, -1.0, 1.0 / 3.0, 0.0});
  check_prefix(defect_series(F, kM), {0.0, 0.0, 1.0 / 3.0, 0.0});
  CHECK(sup_defect(F, kM, 0.999).verdict == Verdict::certified_inside);

  check_prefix(defect_series(square_over_integral(catalog_function("z/(1-z^2)", N)), kM),
               {0.0, 0.0, -1.0 / 3.0, 0.0});

  SUBCASE("generated M members stay in M on the whole disk") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      CHECK(sup_defect(square_over_integral(seeded_member(seed)), kM, 0.999, 1024).verdict ==
            Verdict::certified_inside);
    }
  }
}
