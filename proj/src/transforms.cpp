#include "radii/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "radii/error.hpp"

namespace radii {

FunctionRep omitted_value(const FunctionRep& rep, Complex a) {
  if (a == Complex{}) throw Error(ErrorCode::degenerate_transform, "omitted value must be nonzero");
  const std::size_t order = rep.order();
  const TruncatedSeries shift = TruncatedSeries::monomial(-1.0 / a, 1, order);
  TruncatedSeries z_over_g = linear_combine(1.0, rep.z_over_f(), 1.0, shift);
  if (std::abs(z_over_g[0] - 1.0) > 1e-12) {
    throw Error(ErrorCode::degenerate_transform, "omitted-value transform lost normalization");
  }
  return FunctionRep::from_z_over_f(std::move(z_over_g), "omitted_value(" + rep.label() + ")");
}

namespace {

struct GridValue {
  Complex value;
  double error;
};

// f(z) from whichever side has the smaller certified truncation error at |z|.
class FunctionEvaluator {
 public:
  FunctionEvaluator(const FunctionRep& rep, double r) : rep_(rep) {
    fz_tail_ = tail_or_inf(rep.f_over_z(), r);
    zf_tail_ = tail_or_inf(rep.z_over_f(), r);
  }

  GridValue operator()(Complex z) const {
    const double r = std::abs(z);
    const double direct_error = r * fz_tail_;
    if (direct_error <= zf_tail_ || !std::isfinite(zf_tail_)) {
      return {z * rep_.f_over_z()(z), direct_error};
    }
    const Complex q = rep_.z_over_f()(z);
    const double mq = std::abs(q);
    // |z/(q+e) - z/q| <= r e / (|q| (|q| - e))
    const double error = mq > zf_tail_ ? r * zf_tail_ / (mq * (mq - zf_tail_))
                                       : std::numeric_limits<double>::infinity();
    return {z / q, std::min(error, direct_error)};
  }

 private:
  static double tail_or_inf(const TruncatedSeries& s, double r) {
    if (!s.tail()) return std::numeric_limits<double>::infinity();
    return s.tail_bound(r);
  }

  const FunctionRep& rep_;
  double fz_tail_ = 0.0;
  double zf_tail_ = 0.0;
};

}  // namespace

ForbiddenPoint forbidden_point(const FunctionRep& rep, Complex mu, double lambda) {
  if (!(lambda > 0.0 && lambda <= 1.0)) {
    throw Error(ErrorCode::param_out_of_range, "lambda must lie in (0,1]");
  }
  if (std::abs(mu) > 1.0 - lambda + 1e-12) {
    throw Error(ErrorCode::param_out_of_range, "|mu| must not exceed 1 - lambda");
  }
  const Complex denom = rep.a(2) + mu;
  if (std::abs(denom) < 1e-300) throw Error(ErrorCode::zero_denominator, "f''(0)/2 + mu vanishes");

  ForbiddenPoint out;
  out.point = -1.0 / denom;
  out.min_distance = std::numeric_limits<double>::infinity();

  constexpr std::size_t kRadii = 200;
  constexpr std::size_t kAngles = 512;
  constexpr double kOuter = 0.999;
  for (std::size_t i = 0; i <= kRadii; ++i) {
    const double r = kOuter * static_cast<double>(i) / kRadii;
    const FunctionEvaluator eval(rep, r);
    const std::size_t angles = i == 0 ? 1 : kAngles;
    for (std::size_t k = 0; k < angles; ++k) {
      const Complex z = std::polar(r, 2.0 * std::numbers::pi * k / kAngles);
      const GridValue v = eval(z);
      const double d = std::abs(v.value - out.point);
      if (d < out.min_distance) {
        out.min_distance = d;
        out.error_bound = v.error;
      }
    }
  }
  out.omitted_on_grid = out.min_distance > out.error_bound;
  return out;
}

FunctionRep harmonic_combination(const FunctionRep& f, const FunctionRep& g, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw Error(ErrorCode::param_out_of_range, "t must lie in [0,1]");
  TruncatedSeries z_over_F = linear_combine(1.0 - t, g.z_over_f(), t, f.z_over_f());
  return FunctionRep::from_z_over_f(std::move(z_over_F),
                                    "harmonic(" + f.label() + "," + g.label() + ")");
}

FunctionRep quotient_product(const FunctionRep& g, const FunctionRep& h) {
  return FunctionRep::from_pair(mul(g.f_over_z(), h.f_over_z()),
                                mul(g.z_over_f(), h.z_over_f()),
                                "quotient_product(" + g.label() + "," + h.label() + ")");
}

FunctionRep square_over(const FunctionRep& f) {
  return FunctionRep::from_pair(f.z_over_f(), f.f_over_z(), "square_over(" + f.label() + ")");
}

FunctionRep square_over_integral(const FunctionRep& f) {
  const TruncatedSeries integral = integrate_t_over_f(f);
  // integral / z, dropping the vanishing constant term.
  std::vector<Complex> coeffs(integral.coeffs().begin() + 1, integral.coeffs().end());
  std::optional<Majorant> tail;
  if (const auto& m = integral.tail()) {
    tail = m->is_zero() ? Majorant::zero()
                        : Majorant{m->scale * m->ratio, m->power, m->ratio,
                                   m->degree ? std::optional(*m->degree - 1) : std::nullopt};
  }
  return FunctionRep::from_z_over_f(TruncatedSeries(std::move(coeffs), tail),
                                    "square_over_integral(" + f.label() + ")");
}

}  // namespace radii
