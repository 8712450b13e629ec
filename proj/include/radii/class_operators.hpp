#pragma once

// Defect operators for the classes M(lambda), U(lambda), P(lambda), Omega and
// Omega_A, coefficient certificates, and member generators from Schwarz data.
//
// Convention: z/f = 1 + b_1 z + b_2 z^2 + ..., so b_1 = -f''(0)/2.

#include <cstdint>
#include <string>
#include <string_view>

#include "radii/series.hpp"

namespace radii {

enum class ClassTag { M, U, P, Omega, OmegaA };

struct ClassId {
  ClassTag tag = ClassTag::M;
  double lambda = 1.0;

  /// lambda for M and U, 2 lambda for P, 1/2 for Omega and Omega_A.
  double threshold() const;
  std::string name() const;

  /// "M", "U", "P", "Omega", "OmegaA". Throws ParseError otherwise.
  static ClassId parse(std::string_view text, double lambda = 1.0);
};

enum class Verdict { certified_inside, certified_outside, inconclusive };
const char* to_string(Verdict v) noexcept;

struct DefectReport {
  ClassId class_id;
  TruncatedSeries defect;
  double radius = 0.0;
  double sup_sampled = 0.0;
  double tail_bound = 0.0;
  Verdict verdict = Verdict::inconclusive;
};

enum class CertificateKind { sum_sufficient, area_necessary, quartic_necessary };
const char* to_string(CertificateKind k) noexcept;

struct Certificate {
  CertificateKind kind = CertificateKind::sum_sufficient;
  double value = 0.0;
  double bound = 0.0;
  bool holds = false;
};

/// Left-hand side of the class inequality as a power series:
///   M      sum_{n>=2} (n-1)^2 b_n z^n
///   U     -sum_{n>=2} (n-1)   b_n z^n
///   P      sum_{n>=2} n(n-1)  b_n z^{n-2}
///   Omega  sum_{n>=2} (n-1)   a_n z^n      (Omega_A uses the same series)
TruncatedSeries defect_series(const FunctionRep& rep, ClassId class_id);

/// Samples the defect on |z| = r and classifies against the threshold.
/// Throws TailBoundUnavailable when the needed side has no majorant.
DefectReport sup_defect(const FunctionRep& rep, ClassId class_id, double r,
                        std::size_t samples = kDefaultSamples);

/// M: sum (n-1)^2 |b_n| <= lambda. Omega_A: sum (n-1) |a_n| <= 1/2.
/// Both include the certified tail. Other classes throw UnsupportedClass.
Certificate certificate_sufficient(const FunctionRep& rep, ClassId class_id);

/// sum_{n>=1} (n - mu) |c_n|^2 <= mu where (z/f)^mu = 1 + sum c_n z^n.
/// Truncated at the stored order.
Certificate area_functional(const FunctionRep& rep, double mu);

/// sum_{n>=2} (n-1)^4 |b_n|^2 <= 1, necessary for membership in M.
Certificate quartic_necessary(const FunctionRep& rep);

/// z/f = 1 - b1 z + lambda sum_{n>=2} w_n z^n / (n-1)^2, the member of
/// M(lambda) whose M-defect is lambda w. Requires w_0 = w_1 = 0, |w| <= |z|^2
/// on a 4096-point circle at r = 0.999 (NotSchwarzBounded otherwise), and
/// |b1| <= 2 with b1 = f''(0)/2.
FunctionRep generate_M_member(const TruncatedSeries& w, double lambda, Complex b1);

/// f = z + (z^2/2) int_0^1 w(zt) dt, so a_n = w_{n-2} / (2(n-1)) and the
/// Omega-defect is z^2 w / 2. Requires |w| <= 1 on the sampling circle.
FunctionRep generate_Omega_member(const TruncatedSeries& w);

/// Seeded polynomial Schwarz-type data w(z) = z^lead * sum_{j<terms} c_j z^j
/// with sum |c_j| drawn uniformly in (0, 1], so |w(z)| <= |z|^lead.
TruncatedSeries seeded_schwarz_function(std::uint64_t seed, std::size_t lead,
                                        std::size_t terms, std::size_t order);

}  // namespace radii
