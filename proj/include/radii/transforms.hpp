#pragma once

// Function constructions, all carried out in coefficient space.

#include "radii/series.hpp"

namespace radii {

/// g = a f / (a - f): 1/g = 1/f - 1/a, so only b_1 moves (by -1/a).
FunctionRep omitted_value(const FunctionRep& rep, Complex a);

struct ForbiddenPoint {
  Complex point;             ///< -1 / (f''(0)/2 + mu)
  double min_distance = 0.0; ///< min |f(z) - point| over the sampling grid
  double error_bound = 0.0;  ///< truncation error of the f values used
  bool omitted_on_grid = false;
};

/// For f in M(lambda), 0 < lambda <= 1, |mu| <= 1 - lambda, the value
/// -1/(b + mu) with b = f''(0)/2 is not attained. Checks this on a polar
/// grid of |z| <= 0.999. Throws ZeroDenominator when b + mu = 0.
ForbiddenPoint forbidden_point(const FunctionRep& rep, Complex mu, double lambda);

/// fg / ((1-t) f + t g): z/F = (1-t) z/g + t z/f.
FunctionRep harmonic_combination(const FunctionRep& f, const FunctionRep& g, double t);

/// g h / z: z/F = (z/g)(z/h) and F/z = (g/z)(h/z).
FunctionRep quotient_product(const FunctionRep& g, const FunctionRep& h);

/// z^2 / f: the two sides of the representation swap.
FunctionRep square_over(const FunctionRep& f);

/// z^2 / int_0^z t/f(t) dt: z/F = 1 + sum b_n z^n / (n+1).
FunctionRep square_over_integral(const FunctionRep& f);

}  // namespace radii
