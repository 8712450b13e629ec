#include "radii/special_functions.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "radii/error.hpp"

namespace radii {

namespace {

constexpr double kTarget = 1e-17;

// Direct summation until the first neglected term, times the geometric
// factor 1/(1-x), falls below kTarget.
PolylogValue direct_series(unsigned k, double x) {
  PolylogValue out{k, x, 0.0, 0.0};
  if (x == 0.0) return out;
  double xn = x;
  double sum = 0.0;
  for (std::size_t n = 1;; ++n) {
    sum += xn / std::pow(static_cast<double>(n), static_cast<double>(k));
    xn *= x;
    const double next = xn / std::pow(static_cast<double>(n + 1), static_cast<double>(k));
    const double bound = next / (1.0 - x);
    if (bound < kTarget) {
      out.value = sum;
      out.abs_error_bound = bound + 4.0 * std::numeric_limits<double>::epsilon() * sum;
      return out;
    }
  }
}

}  // namespace

PolylogValue polylog(unsigned k, double x) {
  if (k == 0) throw Error(ErrorCode::argument_out_of_range, "polylog order must be >= 1");
  if (!(x >= 0.0 && x < 1.0)) {
    throw Error(ErrorCode::argument_out_of_range, "polylog argument must lie in [0,1)");
  }
  if (k == 1) {
    const double v = -std::log1p(-x);
    return {1, x, v, 2.0 * std::numeric_limits<double>::epsilon() * v};
  }
  if (k == 2 && x > 0.5) {
    // Li2(x) + Li2(1-x) = pi^2/6 - log(x) log(1-x)
    const PolylogValue mirror = direct_series(2, 1.0 - x);
    const double head = std::numbers::pi * std::numbers::pi / 6.0 - std::log(x) * std::log1p(-x);
    const double v = head - mirror.value;
    return {2, x, v, mirror.abs_error_bound + 8.0 * std::numeric_limits<double>::epsilon() * std::abs(head)};
  }
  return direct_series(k, x);
}

double log_moment(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::argument_out_of_range, "log moment needs n >= 2");
  const double m = static_cast<double>(n - 1);
  return 1.0 / (m * m);
}

}  // namespace radii
