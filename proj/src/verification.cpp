#include "radii/verification.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "radii/bohr.hpp"
#include "radii/class_operators.hpp"
#include "radii/error.hpp"
#include "radii/function_catalog.hpp"
#include "radii/special_functions.hpp"
#include "radii/transforms.hpp"

namespace radii {

namespace {

constexpr double kPi = std::numbers::pi;

class Recorder {
 public:
  void add(std::string id, int criterion, std::string description, double expected,
           std::string provenance, double computed, double tolerance, Comparison cmp) {
    VerificationRecord rec{std::move(id), criterion, std::move(description), expected,
                           std::move(provenance), computed, 0.0, tolerance, cmp, false};
    switch (cmp) {
      case Comparison::equal:
        rec.abs_diff = std::abs(computed - expected);
        rec.pass = rec.abs_diff <= tolerance;
        break;
      case Comparison::at_most:
        rec.abs_diff = std::max(0.0, computed - expected);
        rec.pass = computed <= expected + tolerance;
        break;
      case Comparison::greater_than:
        rec.abs_diff = std::max(0.0, expected - computed);
        rec.pass = computed > expected;
        break;
    }
    if (std::isnan(computed)) rec.pass = false;
    records_.push_back(std::move(rec));
  }

  // Runs `check`; any exception becomes a failing record under `id`.
  void guarded(const std::string& id, int criterion, const std::function<void()>& check) {
    try {
      check();
    } catch (const std::exception& e) {
      VerificationRecord rec;
      rec.id = id;
      rec.criterion = criterion;
      rec.description = std::string("check raised: ") + e.what();
      rec.provenance = "error";
      rec.computed = std::nan("");
      rec.abs_diff = std::nan("");
      records_.push_back(std::move(rec));
    }
  }

  std::vector<VerificationRecord> take() {
    std::sort(records_.begin(), records_.end(),
              [](const auto& a, const auto& b) { return a.id < b.id; });
    return std::move(records_);
  }

 private:
  std::vector<VerificationRecord> records_;
};

double max_coeff_diff(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  double d = 0.0;
  for (std::size_t k = 0; k <= n; ++k) d = std::max(d, std::abs(a[k] - b[k]));
  return d;
}

// -- criterion 1 ----------------------------------------------------------

void root_reproduction(Recorder& rec, const RadiusCatalog& catalog) {
  struct Item { const char* id; double value; double tol; };
  static constexpr Item kItems[] = {
      {"theo1", 0.557384, 5e-5},  {"dilationM", 0.786151, 5e-5}, {"th8ii", 0.396608, 5e-5},
      {"th8iii", 0.304725, 5e-5}, {"t1", 0.294876, 5e-5},        {"t4", 0.260985, 5e-5},
      {"t4B", 0.313967, 5e-5},    {"t4C", 0.352049, 5e-5},       {"th8iv", 0.75085, 1e-4},
      {"th9i", 0.7829, 1e-4},
  };
  for (const Item& it : kItems) {
    const std::string id = std::string("c1/root/") + it.id;
    rec.guarded(id, 1, [&] {
      const RootResult r = solve_radius(catalog, it.id, {}, 1e-12);
      rec.add(id, 1, std::string("smallest root of ") + it.id, it.value, "published", r.root,
              it.tol, Comparison::equal);
    });
  }
}

// -- criterion 2 ----------------------------------------------------------

void closed_forms(Recorder& rec, const RadiusCatalog& catalog) {
  struct Item { const char* id; const char* text; double value; };
  const Item items[] = {
      {"th8i", "2-sqrt(3)", 2.0 - std::sqrt(3.0)},
      {"dilationM", "sqrt((sqrt(5)-1)/2)", std::sqrt((std::sqrt(5.0) - 1.0) / 2.0)},
      {"t1corM2", "sqrt(sqrt(10)-1)/3", std::sqrt(std::sqrt(10.0) - 1.0) / 3.0},
      {"bohrG1", "(sqrt(3)-1)/2", (std::sqrt(3.0) - 1.0) / 2.0},
      {"bohrG2", "sqrt(2)-1", std::sqrt(2.0) - 1.0},
      {"bohrG3", "(sqrt(2)-1)/2", (std::sqrt(2.0) - 1.0) / 2.0},
  };
  for (const Item& it : items) {
    const std::string value_id = std::string("c2/value/") + it.id;
    rec.guarded(value_id, 2, [&] {
      rec.add(value_id, 2, std::string("closed form ") + it.text, it.value, "closed form",
              closed_form_radius(catalog, it.id), 1e-10, Comparison::equal);
    });
    const std::string bisect_id = std::string("c2/bisection/") + it.id;
    rec.guarded(bisect_id, 2, [&] {
      rec.add(bisect_id, 2, std::string("bisection root agrees with ") + it.text, it.value,
              "closed form", solve_radius(catalog, it.id, {}, 1e-14).root, 1e-10,
              Comparison::equal);
    });
  }
  const std::string id = "c2/bisection/t1cor2";
  rec.guarded(id, 2, [&] {
    const EquationParams p{1.0, 1.0, 1.0};
    rec.add(id, 2, "two-factor radius at lambda=lambda'=mu=1 equals sqrt(sqrt(10)-1)/3",
            std::sqrt(std::sqrt(10.0) - 1.0) / 3.0, "closed form",
            solve_radius(catalog, "t1cor2", p, 1e-14).root, 1e-10, Comparison::equal);
  });
}

// -- criterion 3 ----------------------------------------------------------

// The defining expression of each class, built only from the f/z side.
TruncatedSeries direct_expression(const FunctionRep& rep, ClassTag tag) {
  const std::size_t order = rep.order();
  const TruncatedSeries f = rep.f();
  const TruncatedSeries q = reciprocal(rep.f_over_z());  // z/f
  const TruncatedSeries z = TruncatedSeries::monomial(1.0, 1, order);
  const TruncatedSeries one = TruncatedSeries::constant(1.0, order);
  switch (tag) {
    case ClassTag::M: {
      const TruncatedSeries z2q2 = mul(mul(z, z), derivative(derivative(q)));
      const TruncatedSeries u = mul(derivative(f), mul(q, q));
      return linear_combine(1.0, z2q2, 1.0, linear_combine(1.0, u, -1.0, one));
    }
    case ClassTag::U:
      return linear_combine(1.0, mul(derivative(f), mul(q, q)), -1.0, one);
    case ClassTag::P:
      return derivative(derivative(q));
    case ClassTag::Omega:
    case ClassTag::OmegaA:
      return linear_combine(1.0, mul(z, derivative(f)), -1.0, f);
  }
  throw Error(ErrorCode::unsupported_class, "unknown class");
}

void defect_oracle(Recorder& rec, std::size_t order) {
  const std::pair<ClassTag, const char*> classes[] = {
      {ClassTag::M, "M"}, {ClassTag::U, "U"}, {ClassTag::P, "P"}, {ClassTag::Omega, "Omega"}};
  for (const std::string& name : catalog_names()) {
    for (const auto& [tag, cname] : classes) {
      const std::string id = "c3/" + std::string(cname) + "/" + name;
      rec.guarded(id, 3, [&] {
        const FunctionRep rep = catalog_function(name, order);
        const TruncatedSeries coeff = defect_series(rep, ClassId{tag, 1.0});
        const TruncatedSeries direct = direct_expression(rep, tag);
        std::mt19937_64 rng(0x5eed0000u + order);
        std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
        double worst = 0.0;
        for (int k = 0; k < 512; ++k) {
          const Complex z = std::polar(0.7, angle(rng));
          worst = std::max(worst, std::abs(coeff(z) - direct(z)));
        }
        rec.add(id, 3, "coefficient defect vs direct expression, 512 points on |z|=0.7", 0.0,
                "oracle", worst, 1e-9, Comparison::at_most);
      });
    }
  }
}

// -- criterion 4 ----------------------------------------------------------

void transform_invariants(Recorder& rec, std::size_t order) {
  const Complex omitted[] = {1.0, -2.0, Complex(0.0, 0.5), Complex(3.0, 4.0)};
  for (const std::string& name : catalog_names()) {
    const std::string id = "c4/omitted/" + name;
    rec.guarded(id, 4, [&] {
      const FunctionRep f = catalog_function(name, order);
      double worst = 0.0;
      for (const Complex a : omitted) {
        const FunctionRep g = omitted_value(f, a);
        for (ClassTag tag : {ClassTag::M, ClassTag::U, ClassTag::P}) {
          worst = std::max(worst, max_coeff_diff(defect_series(g, {tag, 1.0}),
                                                 defect_series(f, {tag, 1.0})));
        }
      }
      rec.add(id, 4, "omitted-value transform leaves M, U, P defects unchanged", 0.0, "oracle",
              worst, 1e-14, Comparison::at_most);
    });
  }

  const std::pair<const char*, const char*> pairs[] = {
      {"koebe", "z/(1-z)"}, {"z/(1+z^2)", "koebe-neg"}, {"f1", "convex-half"}, {"cexA", "z/(1-z+z^2)"}};
  for (const auto& [fn, gn] : pairs) {
    const std::string id = std::string("c4/harmonic/") + fn + "+" + gn;
    rec.guarded(id, 4, [&] {
      const FunctionRep f = catalog_function(fn, order);
      const FunctionRep g = catalog_function(gn, order);
      double worst = 0.0;
      for (int k = 0; k <= 10; ++k) {
        const double t = k / 10.0;
        const FunctionRep F = harmonic_combination(f, g, t);
        for (ClassTag tag : {ClassTag::M, ClassTag::U, ClassTag::P}) {
          const TruncatedSeries mix = linear_combine(1.0 - t, defect_series(g, {tag, 1.0}), t,
                                                     defect_series(f, {tag, 1.0}));
          worst = std::max(worst, max_coeff_diff(defect_series(F, {tag, 1.0}), mix));
        }
      }
      rec.add(id, 4, "harmonic combination defect is linear in t on {0,0.1,...,1}", 0.0,
              "oracle", worst, 1e-12, Comparison::at_most);
    });
  }

  const std::string id = "c4/roundtrip/M-member";
  rec.guarded(id, 4, [&] {
    double worst = 0.0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const TruncatedSeries w = seeded_schwarz_function(seed, 2, 12, order);
      for (double lambda : {0.5, 1.0}) {
        const Complex b1 = std::polar(2.0 * ((seed % 5) / 5.0), 0.3 * static_cast<double>(seed));
        const FunctionRep rep = generate_M_member(w, lambda, b1);
        const TruncatedSeries scaled = linear_combine(lambda, w, 0.0, w);
        worst = std::max(worst, max_coeff_diff(defect_series(rep, {ClassTag::M, lambda}), scaled));
      }
    }
    rec.add(id, 4, "defect of generated M member equals lambda w (20 seeds, lambda 0.5 and 1)",
            0.0, "oracle", worst, 1e-12, Comparison::at_most);
  });
}

// -- criterion 5 ----------------------------------------------------------

void sz_membership(Recorder& rec, std::size_t order) {
  for (const std::string& name : sz_names()) {
    for (ClassTag tag : {ClassTag::M, ClassTag::U}) {
      const ClassId cls{tag, 1.0};
      const std::string id = "c5/" + cls.name() + "/" + name;
      rec.guarded(id, 5, [&] {
        const DefectReport d = sup_defect(catalog_function(name, order), cls, 0.999);
        // certified_inside is exactly sup + tail <= threshold.
        rec.add(id, 5, "sup of defect plus tail at r=0.999, verdict " + std::string(to_string(d.verdict)),
                cls.threshold(), "published", d.sup_sampled + d.tail_bound, 0.0, Comparison::at_most);
      });
    }
  }
}

// -- criterion 6 ----------------------------------------------------------

void sharpness(Recorder& rec, const RadiusCatalog& catalog, std::size_t order) {
  for (const char* eq : {"th8i", "th8ii", "th8iii", "t1", "bohrG1", "bohrG2", "bohrG3"}) {
    const std::string base = std::string("c6/") + eq;
    rec.guarded(base + "/below", 6, [&] {
      const SharpnessReport s = verify_sharpness(catalog, eq, order);
      const std::string fn = catalog.at(eq).witness->function;
      rec.add(base + "/below", 6, "witness " + fn + " at root-1e-6 stays within threshold",
              s.threshold, "published", s.value_below + s.tail_bound, 1e-9, Comparison::at_most);
      rec.add(base + "/above", 6, "witness " + fn + " at root+1e-3 exceeds threshold",
              s.threshold, "published", s.value_above - s.tail_bound, 0.0, Comparison::greater_than);
      rec.add(base + "/closed-form", 6, "witness value matches its closed form", 0.0,
              "closed form", s.closed_form_gap, 1e-8, Comparison::at_most);
    });
  }
}

// -- criterion 7 ----------------------------------------------------------

void bohr_suite(Recorder& rec, std::size_t order) {
  const double radii[] = {(std::sqrt(3.0) - 1.0) / 2.0, std::sqrt(2.0) - 1.0,
                          (std::sqrt(2.0) - 1.0) / 2.0};
  const char* names[] = {"rogosinski", "bohr", "improved"};
  auto quantity = [](int kind, const FunctionRep& f, Complex z) {
    switch (kind) {
      case 0: return rogosinski_quantity(f, z).quantity;
      case 1: return bohr_quantity(f, std::abs(z)).quantity;
      default: return improved_quantity(f, z).quantity;
    }
  };

  for (int kind = 0; kind < 3; ++kind) {
    const std::string id = std::string("c7/members/") + names[kind];
    rec.guarded(id, 7, [&] {
      double worst = 0.0;
      for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const FunctionRep f = generate_Omega_member(seeded_schwarz_function(1000 + seed, 0, 8, order));
        for (int k = 1; k <= 10; ++k) {
          const double r = radii[kind] * k / 10.0;
          for (int j = 0; j < 4; ++j) worst = std::max(worst, quantity(kind, f, std::polar(r, j * kPi / 2.0)));
        }
      }
      rec.add(id, 7, std::string("max ") + names[kind] + " quantity over 100 seeded members up to the radius",
              0.5, "published", worst, 1e-10, Comparison::at_most);
    });
    const std::string eq_id = std::string("c7/f1/") + names[kind];
    rec.guarded(eq_id, 7, [&] {
      const FunctionRep f1 = catalog_function("f1", order);
      rec.add(eq_id, 7, std::string("f1 attains equality in the ") + names[kind] + " inequality",
              0.5, "published", quantity(kind, f1, Complex(radii[kind])), 1e-10, Comparison::equal);
    });
  }
}

// -- criterion 8 ----------------------------------------------------------

void special_checks(Recorder& rec) {
  rec.guarded("c8/basel-tail", 8, [&] {
    constexpr std::size_t kTerms = 200000;
    double sum = 0.0;
    for (std::size_t n = kTerms; n >= 2; --n) sum += 1.0 / ((n + 1.0) * (n + 1.0));
    // sum_{n>M} (n+1)^-2 lies between 1/(M+2) and 1/(M+1).
    const double m = static_cast<double>(kTerms);
    sum += 0.5 * (1.0 / (m + 2.0) + 1.0 / (m + 1.0));
    rec.add("c8/basel-tail", 8, "sum_{n>=2} (n+1)^-2 = pi^2/6 - 5/4", kPi * kPi / 6.0 - 1.25,
            "published", sum, 1e-9, Comparison::equal);
  });
  rec.guarded("c8/log-moment", 8, [&] {
    double worst = 0.0;
    for (std::size_t n = 2; n <= 64; ++n) {
      const double k = static_cast<double>(n - 1);
      worst = std::max(worst, std::abs(log_moment(n) * k * k - 1.0));
    }
    rec.add("c8/log-moment", 8, "log_moment(n) (n-1)^2 = 1 for n = 2..64", 0.0, "oracle", worst,
            1e-12, Comparison::at_most);
  });
  rec.guarded("c8/li2-reflection", 8, [&] {
    double worst = 0.0;
    for (int k = 1; k <= 9; ++k) {
      const double x = k / 10.0;
      const double lhs = dilog(x) + dilog(1.0 - x);
      const double rhs = kPi * kPi / 6.0 - std::log(x) * std::log1p(-x);
      worst = std::max(worst, std::abs(lhs - rhs));
    }
    rec.add("c8/li2-reflection", 8, "Li2(x) + Li2(1-x) = pi^2/6 - log x log(1-x), x = 0.1..0.9",
            0.0, "oracle", worst, 1e-10, Comparison::at_most);
  });
  rec.guarded("c8/li2-direct", 8, [&] {
    double worst = 0.0;
    for (int k = 1; k <= 9; ++k) {
      const double x = k / 10.0;
      double direct = 0.0, xn = 1.0;
      for (int n = 1; n <= 2000; ++n) {
        xn *= x;
        direct += xn / (static_cast<double>(n) * n);
      }
      worst = std::max(worst, std::abs(dilog(x) - direct));
    }
    rec.add("c8/li2-direct", 8, "Li2 matches brute-force summation, x = 0.1..0.9", 0.0, "oracle",
            worst, 1e-12, Comparison::at_most);
  });
}

// -- criterion 9 ----------------------------------------------------------

void counterexamples(Recorder& rec, std::size_t order) {
  rec.guarded("c9/cexA/defect", 9, [&] {
    const FunctionRep f = catalog_function("cexA", order);
    double worst = 0.0;
    for (double r : {0.5, 0.8, 0.9, 0.95, 0.99}) {
      const DefectReport d = sup_defect(f, {ClassTag::M, 1.0}, r);
      worst = std::max(worst, std::abs(d.sup_sampled - 4.0 / 3.0 * r * r * r));
    }
    rec.add("c9/cexA/defect", 9, "cexA M-defect sup equals (4/3) r^3", 0.0, "closed form", worst,
            1e-9, Comparison::at_most);
  });
  rec.guarded("c9/cexA/crossing", 9, [&] {
    const FunctionRep f = catalog_function("cexA", order);
    auto excess = [&](double r) { return sup_defect(f, {ClassTag::M, 1.0}, r).sup_sampled - 1.0; };
    double lo = 0.5, hi = 0.99;
    for (int i = 0; i < 60; ++i) {
      const double mid = 0.5 * (lo + hi);
      (excess(mid) <= 0.0 ? lo : hi) = mid;
    }
    rec.add("c9/cexA/crossing", 9, "cexA M-defect sup crosses 1 at (3/4)^(1/3)", 0.90856,
            "published", 0.5 * (lo + hi), 1e-5, Comparison::equal);
  });
  rec.guarded("c9/cexA/outside", 9, [&] {
    const DefectReport d = sup_defect(catalog_function("cexA", order), {ClassTag::M, 1.0}, 0.95);
    rec.add("c9/cexA/outside", 9,
            "cexA certified outside M at r=0.95, verdict " + std::string(to_string(d.verdict)), 1.0,
            "published", d.verdict == Verdict::certified_outside ? d.sup_sampled - d.tail_bound : 0.0,
            0.0, Comparison::greater_than);
  });
  rec.guarded("c9/cexB/quartic", 9, [&] {
    const Certificate c = quartic_necessary(catalog_function("cexB", order));
    rec.add("c9/cexB/quartic", 9, "cexB quartic coefficient functional equals 4", 4.0,
            "published", c.value, 1e-12, Comparison::equal);
    rec.add("c9/cexB/quartic-fails", 9, "cexB violates the necessary bound 1", c.bound,
            "published", c.value, 0.0, Comparison::greater_than);
  });
}

}  // namespace

const char* to_string(Comparison c) noexcept {
  switch (c) {
    case Comparison::equal: return "equal";
    case Comparison::at_most: return "at_most";
    case Comparison::greater_than: return "greater_than";
  }
  return "?";
}

const std::vector<std::string>& criterion_titles() {
  static const std::vector<std::string> titles = {
      "root reproduction",
      "closed forms",
      "defect oracle equivalence",
      "transform invariants",
      "S_Z membership",
      "sharpness crossings",
      "Bohr suite",
      "special functions",
      "counterexamples",
  };
  return titles;
}

std::vector<VerificationRecord> run_verification(const RadiusCatalog& catalog, std::size_t order) {
  Recorder rec;
  root_reproduction(rec, catalog);
  closed_forms(rec, catalog);
  defect_oracle(rec, order);
  transform_invariants(rec, order);
  sz_membership(rec, order);
  sharpness(rec, catalog, order);
  bohr_suite(rec, order);
  special_checks(rec);
  counterexamples(rec, order);
  return rec.take();
}

std::vector<CriterionSummary> summarize(const std::vector<VerificationRecord>& records) {
  std::vector<CriterionSummary> out;
  const auto& titles = criterion_titles();
  for (int c = 1; c <= static_cast<int>(titles.size()); ++c) {
    CriterionSummary s{c, titles[c - 1], 0, {}};
    for (const VerificationRecord& r : records) {
      if (r.criterion != c) continue;
      ++s.records;
      if (!r.pass) s.failed.push_back(r.id);
    }
    if (s.records == 0) s.failed.push_back("(no records)");
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace radii
