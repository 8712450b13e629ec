#include "radii/class_operators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "radii/error.hpp"
#include "radii/special_functions.hpp"

namespace radii {

namespace {

constexpr double kGuard = 1e-12;
constexpr double kSchwarzRadius = 0.999;

std::optional<Majorant> weighted_tail(const std::optional<Majorant>& m, double extra_power) {
  if (!m) return std::nullopt;
  if (m->is_zero()) return Majorant::zero();
  return Majorant{m->scale, m->power + extra_power, m->ratio, m->degree};
}

// Sampled sup of |w| / r^k on |z| = r, tail included.
double scaled_circle_sup(const TruncatedSeries& w, double r, int k) {
  const CircleEvaluation eval = eval_on_circle(w, r, kDefaultSamples);
  return (eval.max_modulus() + eval.tail_bound) / std::pow(r, k);
}

}  // namespace

double ClassId::threshold() const {
  switch (tag) {
    case ClassTag::M:
    case ClassTag::U: return lambda;
    case ClassTag::P: return 2.0 * lambda;
    case ClassTag::Omega:
    case ClassTag::OmegaA: return 0.5;
  }
  return lambda;
}

std::string ClassId::name() const {
  switch (tag) {
    case ClassTag::M: return "M";
    case ClassTag::U: return "U";
    case ClassTag::P: return "P";
    case ClassTag::Omega: return "Omega";
    case ClassTag::OmegaA: return "OmegaA";
  }
  return "?";
}

ClassId ClassId::parse(std::string_view text, double lambda) {
  if (!(lambda > 0.0)) throw Error(ErrorCode::param_out_of_range, "lambda must be positive");
  if (text == "M") return {ClassTag::M, lambda};
  if (text == "U") return {ClassTag::U, lambda};
  if (text == "P") return {ClassTag::P, lambda};
  if (text == "Omega") return {ClassTag::Omega, 1.0};
  if (text == "OmegaA") return {ClassTag::OmegaA, 1.0};
  throw Error(ErrorCode::parse_error, "unknown class '" + std::string(text) + "'");
}

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::certified_inside: return "certified_inside";
    case Verdict::certified_outside: return "certified_outside";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

const char* to_string(CertificateKind k) noexcept {
  switch (k) {
    case CertificateKind::sum_sufficient: return "sum_sufficient";
    case CertificateKind::area_necessary: return "area_necessary";
    case CertificateKind::quartic_necessary: return "quartic_necessary";
  }
  return "?";
}

TruncatedSeries defect_series(const FunctionRep& rep, ClassId class_id) {
  const std::size_t order = rep.order();
  switch (class_id.tag) {
    case ClassTag::M:
    case ClassTag::U: {
      const bool is_m = class_id.tag == ClassTag::M;
      std::vector<Complex> out(order + 1, Complex{});
      for (std::size_t n = 2; n <= order; ++n) {
        const double k = static_cast<double>(n - 1);
        out[n] = is_m ? k * k * rep.b(n) : -k * rep.b(n);
      }
      return TruncatedSeries(std::move(out), weighted_tail(rep.z_over_f().tail(), is_m ? 2.0 : 1.0));
    }
    case ClassTag::P: {
      if (order < 2) throw Error(ErrorCode::argument_out_of_range, "P-defect needs order >= 2");
      std::vector<Complex> out(order - 1, Complex{});
      for (std::size_t n = 2; n <= order; ++n) {
        out[n - 2] = static_cast<double>(n) * static_cast<double>(n - 1) * rep.b(n);
      }
      std::optional<Majorant> tail;
      if (const auto& m = rep.z_over_f().tail()) {
        if (m->is_zero()) {
          tail = Majorant::zero();
        } else {
          std::optional<std::size_t> degree;
          if (m->degree) degree = *m->degree >= 2 ? *m->degree - 2 : 0;
          tail = Majorant{2.0 * std::pow(3.0, m->power) * m->scale * m->ratio * m->ratio,
                          m->power + 2.0, m->ratio, degree};
        }
      }
      return TruncatedSeries(std::move(out), tail);
    }
    case ClassTag::Omega:
    case ClassTag::OmegaA: {
      const TruncatedSeries f = rep.f();
      std::vector<Complex> out(order + 1, Complex{});
      for (std::size_t n = 2; n <= order; ++n) out[n] = static_cast<double>(n - 1) * f[n];
      return TruncatedSeries(std::move(out), weighted_tail(f.tail(), 1.0));
    }
  }
  throw Error(ErrorCode::unsupported_class, "unknown class");
}

DefectReport sup_defect(const FunctionRep& rep, ClassId class_id, double r,
                        std::size_t samples) {
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorCode::argument_out_of_range, "radius must lie in (0,1)");
  DefectReport report{class_id, defect_series(rep, class_id), r, 0.0, 0.0, Verdict::inconclusive};
  const CircleEvaluation eval = eval_on_circle(report.defect, r, samples);
  report.sup_sampled = eval.max_modulus();
  report.tail_bound = eval.tail_bound;

  const double threshold = class_id.threshold();
  // Omega is defined by a strict inequality.
  const double inside_limit = class_id.tag == ClassTag::Omega ? threshold - kGuard : threshold;
  if (report.sup_sampled + report.tail_bound <= inside_limit) {
    report.verdict = Verdict::certified_inside;
  } else if (report.sup_sampled - report.tail_bound > threshold + kGuard) {
    report.verdict = Verdict::certified_outside;
  }
  return report;
}

Certificate certificate_sufficient(const FunctionRep& rep, ClassId class_id) {
  Certificate cert;
  cert.kind = CertificateKind::sum_sufficient;
  switch (class_id.tag) {
    case ClassTag::M: cert.bound = class_id.lambda; break;
    case ClassTag::OmegaA: cert.bound = 0.5; break;
    default:
      throw Error(ErrorCode::unsupported_class,
                  "no sufficient coefficient condition for class " + class_id.name());
  }
  const TruncatedSeries defect = defect_series(rep, class_id);
  cert.value = defect.abs_sum(1.0) + defect.tail_bound(1.0);
  cert.holds = cert.value <= cert.bound + kGuard;
  return cert;
}

Certificate area_functional(const FunctionRep& rep, double mu) {
  if (!(mu > 0.0)) throw Error(ErrorCode::param_out_of_range, "mu must be positive");
  // (z/f)^mu by the power recurrence n c_n = sum_k ((mu+1)k - n) b_k c_{n-k}.
  const TruncatedSeries& b = rep.z_over_f();
  const std::size_t order = b.order();
  std::vector<Complex> c(order + 1, Complex{});
  c[0] = 1.0;
  for (std::size_t n = 1; n <= order; ++n) {
    Complex acc{};
    for (std::size_t k = 1; k <= n; ++k) {
      acc += ((mu + 1.0) * static_cast<double>(k) - static_cast<double>(n)) * b[k] * c[n - k];
    }
    c[n] = acc / static_cast<double>(n);
  }
  Certificate cert{CertificateKind::area_necessary, 0.0, mu, false};
  for (std::size_t n = 1; n <= order; ++n) cert.value += (static_cast<double>(n) - mu) * std::norm(c[n]);
  cert.holds = cert.value <= cert.bound + kGuard;
  return cert;
}

Certificate quartic_necessary(const FunctionRep& rep) {
  Certificate cert{CertificateKind::quartic_necessary, 0.0, 1.0, false};
  for (std::size_t n = 2; n <= rep.order(); ++n) {
    const double k2 = static_cast<double>(n - 1) * static_cast<double>(n - 1);
    cert.value += k2 * k2 * std::norm(rep.b(n));
  }
  cert.holds = cert.value <= cert.bound + kGuard;
  return cert;
}

FunctionRep generate_M_member(const TruncatedSeries& w, double lambda, Complex b1) {
  if (!(lambda > 0.0)) throw Error(ErrorCode::param_out_of_range, "lambda must be positive");
  if (std::abs(b1) > 2.0 + kGuard) throw Error(ErrorCode::param_out_of_range, "|f''(0)/2| must be at most 2");
  if (w.order() < 2) throw Error(ErrorCode::argument_out_of_range, "Schwarz data needs order >= 2");
  if (std::abs(w[0]) > 1e-14 || std::abs(w[1]) > 1e-14) {
    throw Error(ErrorCode::not_schwarz_bounded, "Schwarz data must vanish to second order at 0");
  }
  if (scaled_circle_sup(w, kSchwarzRadius, 2) > 1.0 + kGuard) {
    throw Error(ErrorCode::not_schwarz_bounded, "|w(z)| exceeds |z|^2 on the sampling circle");
  }
  const std::size_t order = w.order();
  std::vector<Complex> b(order + 1, Complex{});
  b[0] = 1.0;
  b[1] = -b1;
  for (std::size_t n = 2; n <= order; ++n) b[n] = lambda * log_moment(n) * w[n];
  std::optional<Majorant> tail;
  if (const auto& m = w.tail()) {
    tail = m->is_zero() ? Majorant::zero() : Majorant{lambda * m->scale, m->power, m->ratio, m->degree};
  }
  return FunctionRep::from_z_over_f(TruncatedSeries(std::move(b), tail), "M-member");
}

FunctionRep generate_Omega_member(const TruncatedSeries& w) {
  if (scaled_circle_sup(w, kSchwarzRadius, 0) > 1.0 + kGuard) {
    throw Error(ErrorCode::not_schwarz_bounded, "|w(z)| exceeds 1 on the sampling circle");
  }
  const std::size_t order = w.order();
  std::vector<Complex> fz(order + 1, Complex{});
  fz[0] = 1.0;
  for (std::size_t k = 1; k <= order; ++k) fz[k] = w[k - 1] / (2.0 * static_cast<double>(k));

  std::optional<Majorant> tail;
  if (const auto& m = w.tail()) {
    Majorant shifted = m->is_zero()
                           ? Majorant{0.0, 0.0, 1.0, order + 1}
                           : Majorant{m->scale / (2.0 * m->ratio), m->power, m->ratio,
                                      m->degree ? std::optional(*m->degree + 1) : std::nullopt};
    tail = shifted.covering(order + 1, std::abs(w[order]) / (2.0 * static_cast<double>(order + 1)));
  }
  return FunctionRep::from_f_over_z(TruncatedSeries(std::move(fz), tail), "Omega-member");
}

TruncatedSeries seeded_schwarz_function(std::uint64_t seed, std::size_t lead,
                                        std::size_t terms, std::size_t order) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double total = 1.0 - unit(rng);  // (0, 1]
  std::vector<double> weights(terms);
  double sum = 0.0;
  for (double& x : weights) {
    x = unit(rng) + 1e-3;
    sum += x;
  }
  std::vector<Complex> coeffs(lead + terms, Complex{});
  for (std::size_t j = 0; j < terms; ++j) {
    const double phase = 2.0 * std::numbers::pi * unit(rng);
    coeffs[lead + j] = std::polar(total * weights[j] / sum, phase);
  }
  return TruncatedSeries::polynomial(std::move(coeffs), order);
}

}  // namespace radii
