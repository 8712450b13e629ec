#pragma once

#include <cstddef>

namespace radii {

/// Li_k(x) on [0,1) with a bound on its absolute error.
struct PolylogValue {
  unsigned k = 1;
  double x = 0.0;
  double value = 0.0;
  double abs_error_bound = 0.0;
};

/// Li_k(x) = sum_{n>=1} x^n / n^k for 0 <= x < 1, error bound <= 1e-12.
/// Li_1 is -log(1-x); Li_2 uses the reflection formula above x = 1/2.
/// Throws ArgumentOutOfRange for x outside [0,1) or k == 0.
PolylogValue polylog(unsigned k, double x);

inline double dilog(double x) { return polylog(2, x).value; }

/// int_0^1 t^{n-2} log(1/t) dt = 1/(n-1)^2, the weight that turns a Schwarz
/// coefficient into a z/f coefficient. Requires n >= 2.
double log_moment(std::size_t n);

}  // namespace radii
