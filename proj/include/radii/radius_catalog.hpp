#pragma once

// Registry of radius equations G(r) = 0 on (0,1), a smallest-root bisection
// solver, closed-form radii and sharpness witnesses.
//
// Sign convention: G < 0 on the good side of the root.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "radii/series.hpp"

namespace radii {

struct EquationParams {
  double lambda = 1.0;
  double lambda2 = 1.0;  ///< lambda' of the two-factor product
  double mu = 1.0;
};

struct EquationValue {
  double value = 0.0;
  bool clamped = false;     ///< some radicand was negative and replaced by 0
  double abs_error = 0.0;   ///< bound from special-function evaluation
};

enum class WitnessKind {
  m_defect,         ///< |M-defect of the witness function| at z = side * r
  bohr_sum,         ///< bohr_quantity(f, r)
  rogosinski_sum,   ///< rogosinski_quantity(f, r)
  improved_sum,     ///< improved_quantity(f, r)
};

struct SharpnessWitness {
  WitnessKind kind = WitnessKind::m_defect;
  std::string function;   ///< e.g. "square_over(koebe)"
  std::function<FunctionRep(std::size_t)> build;
  double side = 1.0;      ///< evaluation point z = side * r
  double threshold = 1.0;
  std::function<double(double)> closed_form;  ///< expected value at r
};

struct RadiusEquation {
  std::string id;
  std::string formula;                     ///< human-readable G(r)
  std::vector<std::string> params;         ///< names of parameters G uses
  std::function<EquationValue(double, const EquationParams&)> evaluate;
  double lo = 0.001;
  double hi = 0.999;
  std::optional<double> expected_root;     ///< published decimal value
  double expected_tol = 5e-5;
  std::function<double(const EquationParams&)> closed_form;
  std::string closed_form_text;
  std::optional<SharpnessWitness> witness;
  std::optional<int> figure;
};

class RadiusCatalog {
 public:
  /// Every equation listed in the README, immutable after construction.
  static const RadiusCatalog& standard();

  std::vector<std::string> ids() const;
  const RadiusEquation* find(std::string_view id) const;
  /// Throws UnknownEquation.
  const RadiusEquation& at(std::string_view id) const;

  /// Adds or overwrites an entry; used to build modified catalogs.
  void replace(RadiusEquation eq);

 private:
  std::map<std::string, RadiusEquation, std::less<>> entries_;
};

/// Throws UnknownEquation, ParamOutOfRange (bad params or r outside (0,1)).
EquationValue eval_equation(const RadiusCatalog& catalog, std::string_view id,
                            const EquationParams& params, double r);
EquationValue eval_equation(std::string_view id, const EquationParams& params, double r);

struct RootResult {
  double root = 0.0;
  double lo = 0.0;           ///< final bracket
  double hi = 0.0;
  std::size_t iterations = 0;
  double uncertainty = 0.0;  ///< tol plus propagated evaluation error
  bool clamped = false;
};

/// Scans r_k = k/1000 for the first sign change, then bisects to tol.
/// tol >= 1e-14, at most 200 bisection steps. Throws NoBracketFound.
RootResult solve_radius(const RadiusCatalog& catalog, std::string_view id,
                        const EquationParams& params, double tol = 1e-12);
RootResult solve_radius(std::string_view id, const EquationParams& params, double tol = 1e-12);

/// Throws NoClosedForm when the entry has none.
double closed_form_radius(const RadiusCatalog& catalog, std::string_view id,
                          const EquationParams& params = {});
double closed_form_radius(std::string_view id, const EquationParams& params = {});

struct SharpnessReport {
  std::string eq_id;
  double root = 0.0;
  double threshold = 0.0;
  double r_below = 0.0;
  double value_below = 0.0;   ///< computed from the witness function
  double r_above = 0.0;
  double value_above = 0.0;
  double tail_bound = 0.0;    ///< truncation bound on the computed values
  double closed_form_gap = 0.0;  ///< max |computed - closed form|
  bool holds_below = false;   ///< value_below + tail <= threshold + 1e-9
  bool exceeds_above = false; ///< value_above - tail > threshold
  bool pass = false;
};

/// Evaluates the witness at root - 1e-6 and root + 1e-3 using the library's
/// own transforms and defect operators. Throws NoWitness.
SharpnessReport verify_sharpness(const RadiusCatalog& catalog, std::string_view id,
                                 std::size_t order);
SharpnessReport verify_sharpness(std::string_view id, std::size_t order);

/// Equation id plotted in figure n (1..9); empty when out of range.
std::string figure_equation(int figure);

}  // namespace radii
