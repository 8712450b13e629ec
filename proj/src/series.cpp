#include "radii/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "radii/error.hpp"

namespace radii {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double log_term(const Majorant& m, std::size_t n, double r) {
  return std::log(m.scale) + m.power * std::log(static_cast<double>(n) + 1.0) +
         static_cast<double>(n) * std::log(m.ratio * r);
}

// Majorant valid for every index n >= 0 of a series whose first `order`+1
// coefficients are known exactly.
Majorant full_majorant(const TruncatedSeries& s) {
  Majorant m = *s.tail();
  if (m.is_zero()) m = Majorant{0.0, 0.0, 1.0, s.order()};
  for (std::size_t n = 0; n <= s.order(); ++n) m = m.covering(n, std::abs(s[n]));
  return m;
}

std::optional<std::size_t> effective_degree(const TruncatedSeries& s) {
  if (s.tail()->is_zero()) return s.order();
  return s.tail()->degree;
}

}  // namespace

double Majorant::at(std::size_t n) const {
  if (scale == 0.0) return 0.0;
  if (degree && n > *degree) return 0.0;
  return std::exp(log_term(*this, n, 1.0));
}

double Majorant::tail_sum(std::size_t first, double r) const {
  if (scale == 0.0) return 0.0;
  if (degree) {
    double sum = 0.0;
    for (std::size_t n = first; n <= *degree; ++n) sum += std::exp(log_term(*this, n, r));
    return sum;
  }
  const double q = ratio * r;
  if (q >= 1.0) return kInf;
  // Successive-term ratios ((n+2)/(n+1))^p q decrease in n, so once one drops
  // below 1 the remainder is dominated by a geometric series.
  double sum = 0.0;
  constexpr std::size_t kMaxTerms = 10'000'000;
  for (std::size_t n = first; n < first + kMaxTerms; ++n) {
    const double term = std::exp(log_term(*this, n, r));
    sum += term;
    const double step = std::pow((n + 2.0) / (n + 1.0), power) * q;
    if (step < 1.0) {
      const double rest = term * step / (1.0 - step);
      if (rest <= 1e-17 * sum || rest < 1e-300) return sum + rest;
    }
  }
  const std::size_t n = first + kMaxTerms;
  const double step = std::pow((n + 2.0) / (n + 1.0), power) * q;
  if (step >= 1.0) return kInf;
  return sum + std::exp(log_term(*this, n, r)) / (1.0 - step);
}

Majorant Majorant::covering(std::size_t n, double value) const {
  Majorant m = *this;
  if (m.scale == 0.0 && !m.degree) m.degree = n;
  if (value == 0.0) return m;
  if (m.degree && n > *m.degree) m.degree = n;
  if (m.scale == 0.0) {
    m.power = std::max(m.power, 0.0);
    m.ratio = m.ratio > 0.0 ? m.ratio : 1.0;
  }
  const double needed = std::log(value) - m.power * std::log(n + 1.0) -
                        static_cast<double>(n) * std::log(m.ratio);
  if (needed < 700.0) {
    m.scale = std::max(m.scale, std::exp(needed));
    return m;
  }
  m.scale = std::max(m.scale, 1.0);
  const double rho = std::exp((std::log(value) - std::log(m.scale) -
                               m.power * std::log(n + 1.0)) /
                              static_cast<double>(n));
  m.ratio = std::max(m.ratio, rho);
  return m;
}

TruncatedSeries::TruncatedSeries() : coeffs_(1, Complex{}), tail_(Majorant::zero()) {}

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs,
                                 std::optional<Majorant> tail)
    : coeffs_(std::move(coeffs)), tail_(tail) {
  if (coeffs_.empty()) coeffs_.push_back(Complex{});
}

TruncatedSeries TruncatedSeries::polynomial(std::vector<Complex> coeffs,
                                            std::size_t order) {
  if (coeffs.empty()) coeffs.push_back(Complex{});
  const std::size_t degree = coeffs.size() - 1;
  Majorant tail = Majorant::zero();
  if (degree > order) {
    tail = Majorant{0.0, 0.0, 1.0, degree};
    for (std::size_t n = order + 1; n <= degree; ++n) tail = tail.covering(n, std::abs(coeffs[n]));
    coeffs.resize(order + 1);
  } else {
    coeffs.resize(order + 1, Complex{});
  }
  return TruncatedSeries(std::move(coeffs), tail);
}

TruncatedSeries TruncatedSeries::constant(Complex c, std::size_t order) {
  return polynomial({c}, order);
}

TruncatedSeries TruncatedSeries::monomial(Complex c, std::size_t power,
                                          std::size_t order) {
  std::vector<Complex> coeffs(power + 1, Complex{});
  coeffs[power] = c;
  return polynomial(std::move(coeffs), order);
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  if (order >= this->order()) return *this;
  std::optional<Majorant> tail;
  if (tail_) {
    Majorant m = *tail_;
    if (m.is_zero()) m = Majorant{0.0, 0.0, 1.0, this->order()};
    for (std::size_t n = order + 1; n <= this->order(); ++n) m = m.covering(n, std::abs(coeffs_[n]));
    tail = m;
  }
  return TruncatedSeries(std::vector<Complex>(coeffs_.begin(), coeffs_.begin() + order + 1), tail);
}

Complex TruncatedSeries::operator()(Complex z) const {
  Complex acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double TruncatedSeries::tail_bound(double r) const {
  if (!tail_) {
    throw Error(ErrorCode::tail_bound_unavailable,
                "no coefficient majorant registered for this series");
  }
  return tail_->tail_sum(order() + 1, r);
}

double TruncatedSeries::abs_sum(double r, std::size_t first) const {
  double sum = 0.0;
  double rn = std::pow(r, static_cast<double>(first));
  for (std::size_t n = first; n <= order(); ++n, rn *= r) sum += std::abs(coeffs_[n]) * rn;
  return sum;
}

TruncatedSeries TruncatedSeries::with_tail(std::optional<Majorant> tail) const {
  return TruncatedSeries(coeffs_, tail);
}

TruncatedSeries linear_combine(Complex alpha, const TruncatedSeries& a,
                               Complex beta, const TruncatedSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  const TruncatedSeries ta = a.truncated(order);
  const TruncatedSeries tb = b.truncated(order);
  std::vector<Complex> out(order + 1);
  for (std::size_t n = 0; n <= order; ++n) out[n] = alpha * ta[n] + beta * tb[n];

  std::optional<Majorant> tail;
  if (ta.tail() && tb.tail()) {
    const Majorant& ma = *ta.tail();
    const Majorant& mb = *tb.tail();
    const double ka = std::abs(alpha);
    const double kb = std::abs(beta);
    if (ma.is_zero() || ka == 0.0) {
      tail = Majorant{mb.scale * kb, mb.power, mb.ratio, mb.degree};
    } else if (mb.is_zero() || kb == 0.0) {
      tail = Majorant{ma.scale * ka, ma.power, ma.ratio, ma.degree};
    } else {
      std::optional<std::size_t> degree;
      if (ma.degree && mb.degree) degree = std::max(*ma.degree, *mb.degree);
      tail = Majorant{ka * ma.scale + kb * mb.scale, std::max(ma.power, mb.power),
                      std::max(ma.ratio, mb.ratio), degree};
    }
  }
  return TruncatedSeries(std::move(out), tail);
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  const TruncatedSeries ta = a.truncated(order);
  const TruncatedSeries tb = b.truncated(order);
  std::vector<Complex> out(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    Complex acc{};
    for (std::size_t i = 0; i <= n; ++i) acc += ta[i] * tb[n - i];
    out[n] = acc;
  }

  std::optional<Majorant> tail;
  if (ta.tail() && tb.tail()) {
    const auto da = effective_degree(ta);
    const auto db = effective_degree(tb);
    if (da && db && *da + *db <= order) {
      tail = Majorant::zero();
    } else {
      const Majorant ga = full_majorant(ta);
      const Majorant gb = full_majorant(tb);
      std::optional<std::size_t> degree;
      if (da && db) degree = *da + *db;
      tail = Majorant{ga.scale * gb.scale, ga.power + gb.power + 1.0,
                      std::max(ga.ratio, gb.ratio), degree};
    }
  }
  return TruncatedSeries(std::move(out), tail);
}

TruncatedSeries reciprocal(const TruncatedSeries& a) {
  if (std::abs(a[0]) <= 1e-12) {
    throw Error(ErrorCode::near_zero_constant_term,
                "reciprocal of a series with vanishing constant term");
  }
  const std::size_t order = a.order();
  std::vector<Complex> out(order + 1);
  const Complex inv = 1.0 / a[0];
  out[0] = inv;
  for (std::size_t n = 1; n <= order; ++n) {
    Complex acc{};
    for (std::size_t k = 1; k <= n; ++k) acc += a[k] * out[n - k];
    out[n] = -inv * acc;
  }
  return TruncatedSeries(std::move(out), std::nullopt);
}

TruncatedSeries derivative(const TruncatedSeries& a) {
  if (a.order() == 0) return TruncatedSeries(std::vector<Complex>{Complex{}}, a.tail() ? std::optional(Majorant::zero()) : std::nullopt);
  const std::size_t order = a.order() - 1;
  std::vector<Complex> out(order + 1);
  for (std::size_t n = 0; n <= order; ++n) out[n] = static_cast<double>(n + 1) * a[n + 1];

  std::optional<Majorant> tail;
  if (a.tail()) {
    const Majorant& m = *a.tail();
    if (m.is_zero()) {
      tail = Majorant::zero();
    } else {
      std::optional<std::size_t> degree;
      if (m.degree) degree = *m.degree == 0 ? 0 : *m.degree - 1;
      tail = Majorant{m.scale * m.ratio * std::pow(2.0, m.power), m.power + 1.0, m.ratio, degree};
    }
  }
  return TruncatedSeries(std::move(out), tail);
}

TruncatedSeries dilate_series(const TruncatedSeries& a, double r) {
  std::vector<Complex> out(a.order() + 1);
  double rn = 1.0;
  for (std::size_t n = 0; n <= a.order(); ++n, rn *= r) out[n] = a[n] * rn;
  std::optional<Majorant> tail = a.tail();
  if (tail && !tail->is_zero()) tail->ratio *= r;
  return TruncatedSeries(std::move(out), tail);
}

double CircleEvaluation::max_modulus() const {
  double m = 0.0;
  for (const Complex& v : values) m = std::max(m, std::abs(v));
  return m;
}

CircleEvaluation eval_on_circle(const TruncatedSeries& a, double r,
                                std::size_t samples) {
  if (samples < 8) {
    throw Error(ErrorCode::argument_out_of_range, "circle sampling needs at least 8 points");
  }
  if (!(r > 0.0)) {
    throw Error(ErrorCode::argument_out_of_range, "circle radius must be positive");
  }
  CircleEvaluation out;
  out.tail_bound = a.tail_bound(r);
  out.values.resize(samples);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(samples);
  for (std::size_t k = 0; k < samples; ++k) {
    out.values[k] = a(std::polar(r, step * static_cast<double>(k)));
  }
  return out;
}

FunctionRep::FunctionRep(TruncatedSeries f_over_z, TruncatedSeries z_over_f,
                         std::string label)
    : f_over_z_(std::move(f_over_z)),
      z_over_f_(std::move(z_over_f)),
      label_(std::move(label)) {}

namespace {

void require_unit_constant(const TruncatedSeries& s, const char* which) {
  if (std::abs(s[0] - Complex{1.0, 0.0}) > 1e-12) {
    throw Error(ErrorCode::degenerate_transform,
                std::string(which) + " must have constant term 1");
  }
}

}  // namespace

FunctionRep FunctionRep::from_f_over_z(TruncatedSeries f_over_z, std::string label) {
  require_unit_constant(f_over_z, "f/z");
  TruncatedSeries z_over_f = reciprocal(f_over_z);
  return FunctionRep(std::move(f_over_z), std::move(z_over_f), std::move(label));
}

FunctionRep FunctionRep::from_z_over_f(TruncatedSeries z_over_f, std::string label) {
  require_unit_constant(z_over_f, "z/f");
  TruncatedSeries f_over_z = reciprocal(z_over_f);
  return FunctionRep(std::move(f_over_z), std::move(z_over_f), std::move(label));
}

FunctionRep FunctionRep::from_pair(TruncatedSeries f_over_z,
                                   TruncatedSeries z_over_f, std::string label) {
  require_unit_constant(f_over_z, "f/z");
  require_unit_constant(z_over_f, "z/f");
  const std::size_t order = std::min(f_over_z.order(), z_over_f.order());
  FunctionRep rep(f_over_z.truncated(order), z_over_f.truncated(order), std::move(label));
  // Coefficient products can be large; compare against their magnitude.
  for (std::size_t n = 0; n <= order; ++n) {
    Complex acc{};
    double scale = 1.0;
    for (std::size_t i = 0; i <= n; ++i) {
      const Complex p = rep.f_over_z_[i] * rep.z_over_f_[n - i];
      acc += p;
      scale += std::abs(p);
    }
    if (n == 0) acc -= 1.0;
    if (std::abs(acc) > 1e-10 * scale) {
      throw Error(ErrorCode::degenerate_transform,
                  "f/z and z/f are not reciprocal at coefficient " + std::to_string(n));
    }
  }
  return rep;
}

TruncatedSeries FunctionRep::f() const {
  const std::size_t order = this->order();
  std::vector<Complex> out(order + 1, Complex{});
  for (std::size_t n = 1; n <= order; ++n) out[n] = f_over_z_[n - 1];

  std::optional<Majorant> tail;
  if (f_over_z_.tail()) {
    const Majorant& m = *f_over_z_.tail();
    Majorant shifted = m.is_zero()
                           ? Majorant{0.0, 0.0, 1.0, order + 1}
                           : Majorant{m.scale / m.ratio, m.power, m.ratio,
                                      m.degree ? std::optional(*m.degree + 1) : std::nullopt};
    tail = shifted.covering(order + 1, std::abs(f_over_z_[order]));
  }
  return TruncatedSeries(std::move(out), tail);
}

FunctionRep FunctionRep::relabeled(std::string label) const {
  FunctionRep out = *this;
  out.label_ = std::move(label);
  return out;
}

double duality_defect(const FunctionRep& rep) {
  const TruncatedSeries product = mul(rep.f_over_z(), rep.z_over_f());
  double worst = std::abs(product[0] - 1.0);
  for (std::size_t n = 1; n <= product.order(); ++n) worst = std::max(worst, std::abs(product[n]));
  return worst;
}

TruncatedSeries integrate_t_over_f(const FunctionRep& rep) {
  const TruncatedSeries& b = rep.z_over_f();
  const std::size_t order = b.order() + 1;
  std::vector<Complex> out(order + 1, Complex{});
  for (std::size_t n = 0; n <= b.order(); ++n) out[n + 1] = b[n] / static_cast<double>(n + 1);

  std::optional<Majorant> tail;
  if (b.tail()) {
    const Majorant& m = *b.tail();
    tail = m.is_zero() ? Majorant::zero()
                       : Majorant{m.scale / m.ratio, m.power, m.ratio,
                                  m.degree ? std::optional(*m.degree + 1) : std::nullopt};
  }
  return TruncatedSeries(std::move(out), tail);
}

FunctionRep dilate(const FunctionRep& rep, double r) {
  if (!(r > 0.0 && r < 1.0)) {
    throw Error(ErrorCode::argument_out_of_range, "dilation radius must lie in (0,1)");
  }
  return FunctionRep::from_pair(dilate_series(rep.f_over_z(), r),
                                dilate_series(rep.z_over_f(), r),
                                "dilate(" + rep.label() + ")");
}

}  // namespace radii
