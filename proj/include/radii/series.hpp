#pragma once

// Truncated complex power series about the origin and the dual (f, z/f)
// representation of normalized functions on the unit disk.

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace radii {

using Complex = std::complex<double>;

inline constexpr std::size_t kDefaultOrder = 256;
inline constexpr std::size_t kDefaultSamples = 4096;

/// Coefficient bound for the part of a series beyond its truncation order:
/// |c_n| <= scale * (n+1)^power * ratio^n for every n > order, and c_n = 0
/// for n > degree when a degree is known. scale == 0 means the stored
/// coefficients are the whole series.
struct Majorant {
  double scale = 0.0;
  double power = 0.0;
  double ratio = 1.0;
  std::optional<std::size_t> degree;

  static Majorant zero() { return {}; }
  static Majorant geometric(double scale, double power, double ratio) {
    return {scale, power, ratio, std::nullopt};
  }

  bool is_zero() const { return scale == 0.0; }
  double at(std::size_t n) const;

  /// Sum over n >= first of at(n) * r^n. +inf when the sum diverges.
  double tail_sum(std::size_t first, double r) const;

  /// Smallest enlargement of this bound that also dominates |c_n| = value.
  Majorant covering(std::size_t n, double value) const;
};

class TruncatedSeries {
 public:
  /// The zero series of order 0.
  TruncatedSeries();

  /// Takes the coefficients c_0..c_N verbatim. A missing tail majorant means
  /// nothing is known about coefficients beyond N.
  explicit TruncatedSeries(std::vector<Complex> coeffs,
                           std::optional<Majorant> tail = std::nullopt);

  /// A polynomial held at the given order. Coefficients past the order are
  /// folded into a degree-limited majorant.
  static TruncatedSeries polynomial(std::vector<Complex> coeffs,
                                    std::size_t order);

  static TruncatedSeries constant(Complex c, std::size_t order);
  static TruncatedSeries monomial(Complex c, std::size_t power,
                                  std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  std::span<const Complex> coeffs() const { return coeffs_; }
  const Complex& operator[](std::size_t n) const { return coeffs_[n]; }
  /// Zero beyond the stored order.
  Complex coeff(std::size_t n) const {
    return n < coeffs_.size() ? coeffs_[n] : Complex{};
  }
  const std::optional<Majorant>& tail() const { return tail_; }

  /// Lower order; the tail majorant is enlarged to cover the dropped terms.
  TruncatedSeries truncated(std::size_t order) const;

  /// Horner evaluation of the stored polynomial.
  Complex operator()(Complex z) const;

  /// Certified bound on |sum_{n>N} c_n z^n| for |z| = r.
  /// Throws TailBoundUnavailable without a majorant.
  double tail_bound(double r) const;

  /// sum_{n=first}^{N} |c_n| r^n over the stored coefficients.
  double abs_sum(double r, std::size_t first = 0) const;

  TruncatedSeries with_tail(std::optional<Majorant> tail) const;

 private:
  std::vector<Complex> coeffs_;
  std::optional<Majorant> tail_;
};

TruncatedSeries linear_combine(Complex alpha, const TruncatedSeries& a,
                               Complex beta, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
/// Long division; throws NearZeroConstantTerm when |a_0| <= 1e-12.
TruncatedSeries reciprocal(const TruncatedSeries& a);
TruncatedSeries derivative(const TruncatedSeries& a);
/// c_n -> c_n r^n, i.e. the series of g(rz).
TruncatedSeries dilate_series(const TruncatedSeries& a, double r);

struct CircleEvaluation {
  std::vector<Complex> values;
  double tail_bound = 0.0;

  double max_modulus() const;
};

/// Values at r e^{2 pi i k / samples}, k = 0..samples-1, plus the tail bound
/// of the discarded coefficients. samples >= 8.
CircleEvaluation eval_on_circle(const TruncatedSeries& a, double r,
                                std::size_t samples = kDefaultSamples);

/// A normalized function f = z + a_2 z^2 + ... held both as f/z and as
/// z/f = 1 + b_1 z + b_2 z^2 + ..., each at the same order N.
class FunctionRep {
 public:
  /// Builds z/f by long division; z/f carries no tail majorant.
  static FunctionRep from_f_over_z(TruncatedSeries f_over_z,
                                   std::string label = {});
  /// Builds f/z by long division; f/z carries no tail majorant.
  static FunctionRep from_z_over_f(TruncatedSeries z_over_f,
                                   std::string label = {});
  /// Both sides supplied; checks their product is 1 to the stored order.
  static FunctionRep from_pair(TruncatedSeries f_over_z,
                               TruncatedSeries z_over_f,
                               std::string label = {});

  std::size_t order() const { return f_over_z_.order(); }
  const TruncatedSeries& f_over_z() const { return f_over_z_; }
  const TruncatedSeries& z_over_f() const { return z_over_f_; }
  const std::string& label() const { return label_; }

  /// The a-series z + a_2 z^2 + ... at order N.
  TruncatedSeries f() const;

  Complex a(std::size_t n) const { return n == 0 ? Complex{} : f_over_z_.coeff(n - 1); }
  Complex b(std::size_t n) const { return z_over_f_.coeff(n); }

  /// f(z) from the truncated f/z side.
  Complex operator()(Complex z) const { return z * f_over_z_(z); }

  FunctionRep relabeled(std::string label) const;

 private:
  FunctionRep(TruncatedSeries f_over_z, TruncatedSeries z_over_f,
              std::string label);

  TruncatedSeries f_over_z_;
  TruncatedSeries z_over_f_;
  std::string label_;
};

/// Largest deviation of (f/z)(z/f) from 1 over coefficients 0..N.
double duality_defect(const FunctionRep& rep);

/// Coefficients of int_0^z t/f(t) dt = z + sum b_n z^{n+1}/(n+1), order N+1.
TruncatedSeries integrate_t_over_f(const FunctionRep& rep);

/// f(rz)/r for 0 < r < 1: a_n -> a_n r^{n-1}, b_n -> b_n r^n.
FunctionRep dilate(const FunctionRep& rep, double r);

}  // namespace radii
