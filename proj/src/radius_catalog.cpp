#include "radii/radius_catalog.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "radii/bohr.hpp"
#include "radii/class_operators.hpp"
#include "radii/error.hpp"
#include "radii/function_catalog.hpp"
#include "radii/special_functions.hpp"
#include "radii/transforms.hpp"

namespace radii {

namespace {

constexpr double kScanStep = 1e-3;
constexpr std::size_t kScanPoints = 999;
constexpr std::size_t kMaxBisections = 200;

EquationValue plain(double v) { return {v, false, 0.0}; }

// sqrt(max(0, x)), remembering whether the clamp fired.
double clamped_sqrt(double x, bool& clamped) {
  if (x < 0.0) {
    clamped = true;
    return 0.0;
  }
  return std::sqrt(x);
}

// Pieces shared by A, B, C.
struct ProductTerms {
  double root_term;  // 2 r^2 sqrt(-8r^10 + 31r^8 - 44r^6 + 27r^4) / (1-r^2)^2
  double tail5;      // sum_{n>=4} (n-1)^2 r^n
  double tail3;      // Cauchy-Schwarz bound on the mixed sum
  bool clamped = false;
};

ProductTerms product_terms(double r) {
  ProductTerms t{};
  const double r2 = r * r, r4 = r2 * r2, r6 = r4 * r2, r8 = r4 * r4, r10 = r8 * r2;
  const double q = 1.0 - r2;
  t.root_term = 2.0 * r2 * clamped_sqrt(-8 * r10 + 31 * r8 - 44 * r6 + 27 * r4, t.clamped) / (q * q);
  t.tail5 = r4 * (4 * r2 - 11 * r + 9) / std::pow(1.0 - r, 3);
  const double inner = r8 * (15 - 20 * r2 + 15 * r4 - 4 * r6) / std::pow(q, 4) - r4 * (std::log1p(-r2) + r2);
  t.tail3 = clamped_sqrt(inner, t.clamped);
  return t;
}

EquationValue product_equation(double r, double c2, double c3, double c_tail3) {
  const ProductTerms t = product_terms(r);
  const double v = c2 * r * r + c3 * r * r * r + t.root_term + t.tail5 + c_tail3 * t.tail3 - 1.0;
  return {v, t.clamped, 0.0};
}

void require_positive(double x, const char* name) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw Error(ErrorCode::param_out_of_range, std::string(name) + " must be positive and finite");
  }
}

// sum_{n>=2} (n-1)^3/(n+1)^2 x^n - 1, the Taylor form of the th9i left side.
// Used for x < 1/4, where the closed form loses digits to cancellation.
EquationValue th9i_small(double x) {
  double sum = 0.0;
  double xn = x * x;
  for (std::size_t n = 2; n < 200; ++n, xn *= x) {
    const double m = static_cast<double>(n);
    const double term = (m - 1) * (m - 1) * (m - 1) / ((m + 1) * (m + 1)) * xn;
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return plain(sum - 1.0);
}

double t1cor2_closed(const EquationParams& p) {
  const double s = p.lambda + p.lambda2;
  const double q = p.lambda * p.lambda + p.lambda * p.lambda2 + p.lambda2 * p.lambda2;
  return std::sqrt((-s + std::sqrt(s * s + 12.0 * p.mu * q)) / (6.0 * q));
}

FunctionRep named(std::string_view name, std::size_t order) { return catalog_function(name, order); }

SharpnessWitness m_witness(std::string function, std::function<FunctionRep(std::size_t)> build,
                           double side, std::function<double(double)> closed) {
  return {WitnessKind::m_defect, std::move(function), std::move(build), side, 1.0, std::move(closed)};
}

SharpnessWitness f1_witness(WitnessKind kind, std::function<double(double)> closed) {
  return {kind, "f1", [](std::size_t order) { return named("f1", order); }, 1.0, kOmegaDistance,
          std::move(closed)};
}

RadiusCatalog build_standard() {
  RadiusCatalog c;
  const double sqrt2 = std::numbers::sqrt2;

  {
    RadiusEquation e;
    e.id = "theo";
    e.formula = "r^4(r^4+4r^2+1) - lambda^2 (1-r^2)^4";
    e.params = {"lambda"};
    e.evaluate = [](double r, const EquationParams& p) {
      require_positive(p.lambda, "lambda");
      const double r2 = r * r;
      return plain(r2 * r2 * (r2 * r2 + 4 * r2 + 1) - p.lambda * p.lambda * std::pow(1 - r2, 4));
    };
    c.replace(std::move(e));
  }
  {
    RadiusEquation e;
    e.id = "theo1";
    e.formula = "8r^6 - 5r^4 + 4r^2 - 1";
    e.evaluate = [](double r, const EquationParams&) {
      const double r2 = r * r;
      return plain(((8 * r2 - 5) * r2 + 4) * r2 - 1);
    };
    e.expected_root = 0.557384;
    e.figure = 1;
    c.replace(std::move(e));
  }
  {
    RadiusEquation e;
    e.id = "dilationM";
    e.formula = "r^4 + r^2 - 1";
    e.evaluate = [](double r, const EquationParams&) { return plain(r * r * r * r + r * r - 1); };
    e.expected_root = 0.786151;
    e.closed_form = [](const EquationParams&) { return std::sqrt((std::sqrt(5.0) - 1.0) / 2.0); };
    e.closed_form_text = "sqrt((sqrt(5)-1)/2)";
    e.figure = 2;
    c.replace(std::move(e));
  }
  {
    RadiusEquation e;
    e.id = "th8i";
    e.formula = "r^2(3+4r-r^2) - (1-r)^4";
    e.evaluate = [](double r, const EquationParams&) {
      return plain(r * r * (3 + 4 * r - r * r) - std::pow(1 - r, 4));
    };
    e.closed_form = [](const EquationParams&) { return 2.0 - std::sqrt(3.0); };
    e.closed_form_text = "2-sqrt(3)";
    e.witness = m_witness(
        "square_over(koebe)", [](std::size_t n) { return square_over(named("koebe", n)); }, 1.0,
        [](double r) { return (3 * r * r + 4 * r * r * r - std::pow(r, 4)) / std::pow(1 - r, 4); });
    c.replace(std::move(e));
  }
  {
    RadiusEquation e;
    e.id = "th8ii";
    e.formula = "-(1 - 3r + 2r^2 - 2r^3)";
    e.evaluate = [](double r, const EquationParams&) {
      return plain(-(1 - 3 * r + 2 * r * r - 2 * r * r * r));
    };
    e.expected_root = 0.396608;
    e.witness = m_witness(
        "square_over(z/(1-z))", [](std::size_t n) { return square_over(named("z/(1-z)", n)); }, 1.0,
        [](double r) { return r * r * (1 + r) / std::pow(1 - r, 3); });
    c.replace(std::move(e));
  }
  {
    RadiusEquation e;
    e.id = "th8iii";
    e.formula = "-(2r^4 - 6r^3 + 4r^2 - 4r + 1)";
    e.evaluate = [](double r, const EquationParams&) {
      return plain(-((((2 * r - 6) * r + 4) * r - 4) * r + 1));
    };
    e.expected_root = 0.304725;
    e.witness = m_witness(
        "square_over(convex-half)", [](std::size_t n) { return square_over(named("convex-half", n)); },
        1.0, [](double r) { return (2 * r * r + 2 * r * r * r - std::pow(r, 4)) / std::pow(1 - r, 4); });
    c.replace(std::move(e));
  }
  {
    RadiusEquation e;
    e.id = "th8iv";
    e.formula = "3r - 2r^2 + (r^2 - 5r + 4) log(1-r)";
    e.evaluate = [](double r, const EquationParams&) {
      return plain(3 * r - 2 * r * r + (r * r - 5 * r + 4) * std::log1p(-r));
    };
    e.expected_root = 0.75085;
    e.expected_tol = 1e-4;
    e.figure = 8;
    c.replace(std::move(e));
  }
  {
    RadiusEquation e;
    e.id = "th9i";
    e.formula = "(-4+4r^2+r^4)/(1-r^2)^2 - (12/r^2) log(1-r^2) - (8/r^2) Li2(r^2) - 1";
    e.evaluate = [](double r, const EquationParams&) {
      const double r2 = r * r;
      if (r2 < 0.25) return th9i_small(r2);
      const PolylogValue li2 = polylog(2, r2);
      const double v = (-4 + 4 * r2 + r2 * r2) / std::pow(1 - r2, 2) - 12.0 / r2 * std::log1p(-r2) -
                       8.0 / r2 * li2.value - 1.0;
      return EquationValue{v, false, 8.0 / r2 * li2.abs_error_bound};
    };
    e.expected_root = 0.7829;
    e.expected_tol = 1e-4;
    e.figure = 9;
    c.replace(std::move(e));
  }
  {
    RadiusEquation e;
    e.id = "t1";
    e.formula = "9r^4 + 16r^3 + 6r^2 - 1";
    e.evaluate = [](double r, const EquationParams&) {
      return plain(((9 * r + 16) * r + 6) * r * r - 1);
    };
    e.expected_root = 0.294876;
    e.witness = m_witness(
        "quotient_product(koebe,koebe)",
        [](std::size_t n) {
          const FunctionRep k = named("koebe", n);
          return quotient_product(k, k);
        },
        -1.0, [](double r) { return ((9 * r + 16) * r + 6) * r * r; });
    e.figure = 3;
    c.replace(std::move(e));
  }
  {
    RadiusEquation e;
    e.id = "t1corM2";
    e.formula = "9r^4 + 2r^2 - 1";
    e.evaluate = [](double r, const EquationParams&) { return plain(9 * std::pow(r, 4) + 2 * r * r - 1); };
    e.closed_form = [](const EquationParams&) { return std::sqrt(std::sqrt(10.0) - 1.0) / 3.0; };
    e.closed_form_text = "sqrt(sqrt(10)-1)/3";
    e.figure = 4;
    c.replace(std::move(e));
  }
  {
    RadiusEquation e;
    e.id = "t1cor2";
    e.formula = "3(l^2 + l l' + l'^2) r^4 + (l + l') r^2 - mu";
    e.params = {"lambda", "lambda2", "mu"};
    e.evaluate = [](double r, const EquationParams& p) {
      require_positive(p.lambda, "lambda");
      require_positive(p.lambda2, "lambda2");
      require_positive(p.mu, "mu");
      const double q = p.lambda * p.lambda + p.lambda * p.lambda2 + p.lambda2 * p.lambda2;
      const double r2 = r * r;
      return plain(3 * q * r2 * r2 + (p.lambda + p.lambda2) * r2 - p.mu);
    };
    e.closed_form = t1cor2_closed;
    e.closed_form_text =
        "sqrt((-(l+l') + sqrt((l+l')^2 + 12 mu (l^2+l l'+l'^2))) / (6 (l^2+l l'+l'^2)))";
    c.replace(std::move(e));
  }
  {
    RadiusEquation e;
    e.id = "t4";
    e.formula = "A(r)";
    e.evaluate = [sqrt2](double r, const EquationParams&) {
      return product_equation(r, 6.0, 4.0 * (sqrt2 + 4.0), 4.0);
    };
    e.expected_root = 0.260985;
    e.figure = 5;
    c.replace(std::move(e));
  }
  {
    RadiusEquation e;
    e.id = "t4B";
    e.formula = "B(r)";
    e.evaluate = [sqrt2](double r, const EquationParams&) {
      return product_equation(r, 2.0, 4.0 * (sqrt2 + 2.0), 2.0);
    };
    e.expected_root = 0.313967;
    e.figure = 6;
    c.replace(std::move(e));
  }
  {
    RadiusEquation e;
    e.id = "t4C";
    e.formula = "C(r)";
    e.evaluate = [sqrt2](double r, const EquationParams&) {
      return product_equation(r, 2.0, 4.0 * sqrt2, 0.0);
    };
    e.expected_root = 0.352049;
    e.figure = 7;
    c.replace(std::move(e));
  }
  {
    RadiusEquation e;
    e.id = "bohrG1";
    e.formula = "2r + 2r^2 - 1";
    e.evaluate = [](double r, const EquationParams&) { return plain(2 * r + 2 * r * r - 1); };
    e.closed_form = [](const EquationParams&) { return (std::sqrt(3.0) - 1.0) / 2.0; };
    e.closed_form_text = "(sqrt(3)-1)/2";
    e.witness = f1_witness(WitnessKind::rogosinski_sum, [](double r) { return r + r * r; });
    c.replace(std::move(e));
  }
  {
    RadiusEquation e;
    e.id = "bohrG2";
    e.formula = "2r + r^2 - 1";
    e.evaluate = [](double r, const EquationParams&) { return plain(2 * r + r * r - 1); };
    e.closed_form = [](const EquationParams&) { return std::numbers::sqrt2 - 1.0; };
    e.closed_form_text = "sqrt(2)-1";
    e.witness = f1_witness(WitnessKind::bohr_sum, [](double r) { return r + r * r / 2.0; });
    c.replace(std::move(e));
  }
  {
    RadiusEquation e;
    e.id = "bohrG3";
    e.formula = "4r + 4r^2 - 1";
    e.evaluate = [](double r, const EquationParams&) { return plain(4 * r + 4 * r * r - 1); };
    e.closed_form = [](const EquationParams&) { return (std::numbers::sqrt2 - 1.0) / 2.0; };
    e.closed_form_text = "(sqrt(2)-1)/2";
    e.witness = f1_witness(WitnessKind::improved_sum, [](double r) { return 2 * r + 2 * r * r; });
    c.replace(std::move(e));
  }
  return c;
}

// Witness value at radius r and the truncation bound that goes with it.
std::pair<double, double> witness_value(const SharpnessWitness& w, const FunctionRep& rep, double r) {
  switch (w.kind) {
    case WitnessKind::m_defect: {
      const TruncatedSeries defect = defect_series(rep, ClassId{ClassTag::M, 1.0});
      return {std::abs(defect(Complex(w.side * r))), defect.tail_bound(r)};
    }
    case WitnessKind::bohr_sum: {
      const BohrReport b = bohr_quantity(rep, r);
      return {b.quantity - b.tail_bound, b.tail_bound};
    }
    case WitnessKind::rogosinski_sum: {
      const BohrReport b = rogosinski_quantity(rep, Complex(w.side * r));
      return {b.quantity - b.tail_bound, b.tail_bound};
    }
    case WitnessKind::improved_sum: {
      const BohrReport b = improved_quantity(rep, Complex(w.side * r));
      return {b.quantity - b.tail_bound, b.tail_bound};
    }
  }
  throw Error(ErrorCode::no_witness, "unknown witness kind");
}

}  // namespace

const RadiusCatalog& RadiusCatalog::standard() {
  static const RadiusCatalog catalog = build_standard();
  return catalog;
}

std::vector<std::string> RadiusCatalog::ids() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& [id, eq] : entries_) out.push_back(id);
  return out;
}

const RadiusEquation* RadiusCatalog::find(std::string_view id) const {
  const auto it = entries_.find(id);
  return it == entries_.end() ? nullptr : &it->second;
}

const RadiusEquation& RadiusCatalog::at(std::string_view id) const {
  if (const RadiusEquation* eq = find(id)) return *eq;
  throw Error(ErrorCode::unknown_equation, "unknown equation '" + std::string(id) + "'");
}

void RadiusCatalog::replace(RadiusEquation eq) {
  std::string id = eq.id;
  entries_.insert_or_assign(std::move(id), std::move(eq));
}

EquationValue eval_equation(const RadiusCatalog& catalog, std::string_view id,
                            const EquationParams& params, double r) {
  const RadiusEquation& eq = catalog.at(id);
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorCode::param_out_of_range, "r must lie in (0,1)");
  return eq.evaluate(r, params);
}

EquationValue eval_equation(std::string_view id, const EquationParams& params, double r) {
  return eval_equation(RadiusCatalog::standard(), id, params, r);
}

RootResult solve_radius(const RadiusCatalog& catalog, std::string_view id,
                        const EquationParams& params, double tol) {
  if (!(tol >= 1e-14)) throw Error(ErrorCode::param_out_of_range, "tol must be at least 1e-14");
  const RadiusEquation& eq = catalog.at(id);
  RootResult out;

  auto G = [&](double r) {
    const EquationValue v = eq.evaluate(r, params);
    out.clamped = out.clamped || v.clamped;
    return v;
  };

  double lo = kScanStep;
  EquationValue g_lo = G(lo);
  bool found = false;
  double hi = lo;
  for (std::size_t k = 1; k <= kScanPoints; ++k) {
    const double r = static_cast<double>(k) * kScanStep;
    const EquationValue g = G(r);
    if (g.value == 0.0) {
      out.root = out.lo = out.hi = r;
      out.uncertainty = g.abs_error;
      return out;
    }
    if (k > 1 && std::signbit(g.value) != std::signbit(g_lo.value)) {
      hi = r;
      found = true;
      break;
    }
    lo = r;
    g_lo = g;
  }
  if (!found) {
    throw Error(ErrorCode::no_bracket_found, "no sign change of '" + std::string(id) + "' on (0,1)");
  }

  const bool lo_negative = std::signbit(g_lo.value);
  double max_err = 0.0;
  while (hi - lo > tol && out.iterations < kMaxBisections) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const EquationValue g = G(mid);
    max_err = std::max(max_err, g.abs_error);
    ++out.iterations;
    if (g.value == 0.0) {
      lo = hi = mid;
      break;
    }
    (std::signbit(g.value) == lo_negative ? lo : hi) = mid;
  }
  out.lo = lo;
  out.hi = hi;
  out.root = 0.5 * (lo + hi);
  out.uncertainty = std::max(tol, hi - lo);
  if (max_err > 0.0) {
    const double h = 1e-6;
    const double slope = std::abs(G(std::min(out.root + h, 0.9999999)).value -
                                  G(std::max(out.root - h, 1e-7)).value) / (2.0 * h);
    out.uncertainty += slope > 0.0 ? max_err / slope : max_err;
  }
  return out;
}

RootResult solve_radius(std::string_view id, const EquationParams& params, double tol) {
  return solve_radius(RadiusCatalog::standard(), id, params, tol);
}

double closed_form_radius(const RadiusCatalog& catalog, std::string_view id,
                          const EquationParams& params) {
  const RadiusEquation& eq = catalog.at(id);
  if (!eq.closed_form) {
    throw Error(ErrorCode::no_closed_form, "equation '" + std::string(id) + "' has no closed form");
  }
  if (!eq.params.empty()) eq.evaluate(0.5, params);  // parameter validation
  return eq.closed_form(params);
}

double closed_form_radius(std::string_view id, const EquationParams& params) {
  return closed_form_radius(RadiusCatalog::standard(), id, params);
}

SharpnessReport verify_sharpness(const RadiusCatalog& catalog, std::string_view id,
                                 std::size_t order) {
  const RadiusEquation& eq = catalog.at(id);
  if (!eq.witness) {
    throw Error(ErrorCode::no_witness, "equation '" + std::string(id) + "' has no sharpness witness");
  }
  const SharpnessWitness& w = *eq.witness;
  SharpnessReport report;
  report.eq_id = std::string(id);
  report.root = solve_radius(catalog, id, {}, 1e-13).root;
  report.threshold = w.threshold;
  report.r_below = report.root - 1e-6;
  report.r_above = report.root + 1e-3;

  const FunctionRep rep = w.build(order);
  const auto [below, tail_below] = witness_value(w, rep, report.r_below);
  const auto [above, tail_above] = witness_value(w, rep, report.r_above);
  report.value_below = below;
  report.value_above = above;
  report.tail_bound = std::max(tail_below, tail_above);
  report.closed_form_gap = std::max(std::abs(below - w.closed_form(report.r_below)),
                                    std::abs(above - w.closed_form(report.r_above)));
  report.holds_below = below + tail_below <= w.threshold + 1e-9;
  report.exceeds_above = above - tail_above > w.threshold;
  report.pass = report.holds_below && report.exceeds_above && report.closed_form_gap <= 1e-8;
  return report;
}

SharpnessReport verify_sharpness(std::string_view id, std::size_t order) {
  return verify_sharpness(RadiusCatalog::standard(), id, order);
}

std::string figure_equation(int figure) {
  for (const std::string& id : RadiusCatalog::standard().ids()) {
    const RadiusEquation& eq = RadiusCatalog::standard().at(id);
    if (eq.figure && *eq.figure == figure) return id;
  }
  return {};
}

}  // namespace radii
