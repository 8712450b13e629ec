#pragma once

// Bohr, Bohr-Rogosinski and improved Bohr quantities for the class Omega_A,
// growth bounds for Omega, and the boundary distance of f1(z) = z + z^2/2.

#include <cstddef>

#include "radii/series.hpp"

namespace radii {

/// Every f in Omega has d(f(0), boundary of f(D)) >= 1/2.
inline constexpr double kOmegaDistance = 0.5;

struct GrowthBounds {
  double f_lo = 0.0;   ///< r - r^2/2
  double f_hi = 0.0;   ///< r + r^2/2
  double fp_lo = 0.0;  ///< 1 - r
  double fp_hi = 0.0;  ///< 1 + r
};

/// Bounds on |f(z)| and |f'(z)| at |z| = r for f in Omega, 0 <= r < 1.
GrowthBounds growth_bounds(double r);

enum class BohrKind { bohr, rogosinski, improved };
const char* to_string(BohrKind kind) noexcept;

struct BohrReport {
  BohrKind kind = BohrKind::bohr;
  double r = 0.0;
  double quantity = 0.0;     ///< finite sums plus tail_bound
  double tail_bound = 0.0;   ///< certified bound on the neglected terms
  double distance_bound = kOmegaDistance;
  bool satisfied = false;    ///< quantity <= distance_bound + 1e-12
};

/// r + sum_{n>=2} |a_n| r^n.
/// All three quantities throw NotCertifiedOmegaA unless
/// sum (n-1)|a_n| <= 1/2 is certified, tail included.
BohrReport bohr_quantity(const FunctionRep& rep, double r);

/// |f(z)| + sum_{n>=N} |a_n| r^n with r = |z|.
BohrReport rogosinski_quantity(const FunctionRep& rep, Complex z, std::size_t N = 2);

/// |f(z)| + |f'(z)| r + sum_{n>=2} |a_n| r^n with r = |z|.
BohrReport improved_quantity(const FunctionRep& rep, Complex z);

/// |f1(e^{i theta})| for f1(z) = z + z^2/2.
double f1_boundary_modulus(double theta);

/// Minimum of |f1| over `samples` equally spaced boundary points (theta = pi
/// is among them for even counts), approximating d(f1(0), boundary) = 1/2.
double distance_for_f1(std::size_t samples = kDefaultSamples);

}  // namespace radii
