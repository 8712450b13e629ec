#include "radii/bohr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "radii/class_operators.hpp"
#include "radii/error.hpp"

namespace radii {

namespace {

constexpr double kGuard = 1e-12;

// The a-series and two tail bounds at radius r:
//   plain    >= sum_{n>K} |a_n| r^n
//   weighted >= sum_{n>K} n |a_n| r^n
// Each is the smaller of the Omega_A remainder bound and the majorant bound.
struct CertifiedSeries {
  TruncatedSeries a;
  double plain = 0.0;
  double weighted = 0.0;
};

CertifiedSeries certify(const FunctionRep& rep, double r) {
  if (!(r >= 0.0 && r < 1.0)) throw Error(ErrorCode::argument_out_of_range, "radius must lie in [0,1)");
  Certificate cert;
  try {
    cert = certificate_sufficient(rep, ClassId{ClassTag::OmegaA, 1.0});
  } catch (const Error& e) {
    if (e.code() != ErrorCode::tail_bound_unavailable) throw;
    throw Error(ErrorCode::not_certified_omega_a, "Omega_A certificate needs a tail majorant for f");
  }
  if (!cert.holds) {
    throw Error(ErrorCode::not_certified_omega_a,
                "sum (n-1)|a_n| = " + std::to_string(cert.value) + " exceeds 1/2");
  }

  CertifiedSeries out{rep.f()};
  const std::size_t K = out.a.order();
  double head = 0.0;
  for (std::size_t n = 2; n <= K; ++n) head += static_cast<double>(n - 1) * std::abs(out.a[n]);
  const double rem = std::max(0.0, 0.5 - head);
  const double rk = std::pow(r, static_cast<double>(K + 1));
  const double k = static_cast<double>(K);
  out.plain = rk * rem / k;
  out.weighted = rk * rem * (k + 1.0) / k;

  if (const auto& m = out.a.tail()) {
    out.plain = std::min(out.plain, m->tail_sum(K + 1, r));
    const Majorant shifted{m->scale, m->power + 1.0, m->ratio, m->degree};
    out.weighted = std::min(out.weighted, m->is_zero() ? 0.0 : shifted.tail_sum(K + 1, r));
  }
  return out;
}

BohrReport finish(BohrKind kind, double r, double finite, double tail) {
  BohrReport report;
  report.kind = kind;
  report.r = r;
  report.tail_bound = tail;
  report.quantity = finite + tail;
  report.satisfied = report.quantity <= report.distance_bound + kGuard;
  return report;
}

}  // namespace

GrowthBounds growth_bounds(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw Error(ErrorCode::argument_out_of_range, "radius must lie in [0,1)");
  return {r - r * r / 2.0, r + r * r / 2.0, 1.0 - r, 1.0 + r};
}

const char* to_string(BohrKind kind) noexcept {
  switch (kind) {
    case BohrKind::bohr: return "bohr";
    case BohrKind::rogosinski: return "rogosinski";
    case BohrKind::improved: return "improved";
  }
  return "?";
}

BohrReport bohr_quantity(const FunctionRep& rep, double r) {
  const CertifiedSeries s = certify(rep, r);
  return finish(BohrKind::bohr, r, r + s.a.abs_sum(r, 2), s.plain);
}

BohrReport rogosinski_quantity(const FunctionRep& rep, Complex z, std::size_t N) {
  if (N < 1) throw Error(ErrorCode::argument_out_of_range, "Rogosinski index must be >= 1");
  const double r = std::abs(z);
  const CertifiedSeries s = certify(rep, r);
  // |f(z)| and the coefficient sum share the same neglected terms.
  const double finite = std::abs(s.a(z)) + s.a.abs_sum(r, N);
  return finish(BohrKind::rogosinski, r, finite, 2.0 * s.plain);
}

BohrReport improved_quantity(const FunctionRep& rep, Complex z) {
  const double r = std::abs(z);
  const CertifiedSeries s = certify(rep, r);
  const Complex fp = derivative(s.a)(z);
  const double finite = std::abs(s.a(z)) + std::abs(fp) * r + s.a.abs_sum(r, 2);
  return finish(BohrKind::improved, r, finite, 2.0 * s.plain + s.weighted);
}

double f1_boundary_modulus(double theta) {
  const Complex z = std::polar(1.0, theta);
  return std::abs(z + z * z / 2.0);
}

double distance_for_f1(std::size_t samples) {
  if (samples < 2) throw Error(ErrorCode::argument_out_of_range, "need at least two boundary samples");
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < samples; ++k) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(samples);
    best = std::min(best, f1_boundary_modulus(theta));
  }
  return best;
}

}  // namespace radii
