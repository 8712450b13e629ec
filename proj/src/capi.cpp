#include "radii_lab.h"

#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "radii/bohr.hpp"
#include "radii/class_operators.hpp"
#include "radii/error.hpp"
#include "radii/function_catalog.hpp"
#include "radii/radius_catalog.hpp"
#include "radii/reporting.hpp"
#include "radii/verification.hpp"

struct rl_function {
  radii::FunctionRep rep;
};

struct rl_verification {
  std::vector<radii::VerificationRecord> records;
};

namespace {

thread_local std::string g_last_error;

rl_status to_status(radii::ErrorCode code) {
  using radii::ErrorCode;
  switch (code) {
    case ErrorCode::near_zero_constant_term: return RL_ERR_NEAR_ZERO_CONSTANT_TERM;
    case ErrorCode::tail_bound_unavailable: return RL_ERR_TAIL_BOUND_UNAVAILABLE;
    case ErrorCode::argument_out_of_range: return RL_ERR_ARGUMENT_OUT_OF_RANGE;
    case ErrorCode::unsupported_class: return RL_ERR_UNSUPPORTED_CLASS;
    case ErrorCode::not_schwarz_bounded: return RL_ERR_NOT_SCHWARZ_BOUNDED;
    case ErrorCode::degenerate_transform: return RL_ERR_DEGENERATE_TRANSFORM;
    case ErrorCode::zero_denominator: return RL_ERR_ZERO_DENOMINATOR;
    case ErrorCode::unknown_equation: return RL_ERR_UNKNOWN_EQUATION;
    case ErrorCode::param_out_of_range: return RL_ERR_PARAM_OUT_OF_RANGE;
    case ErrorCode::no_bracket_found: return RL_ERR_NO_BRACKET_FOUND;
    case ErrorCode::no_closed_form: return RL_ERR_NO_CLOSED_FORM;
    case ErrorCode::no_witness: return RL_ERR_NO_WITNESS;
    case ErrorCode::not_certified_omega_a: return RL_ERR_NOT_CERTIFIED_OMEGA_A;
    case ErrorCode::parse_error: return RL_ERR_PARSE;
    case ErrorCode::io_error: return RL_ERR_IO;
  }
  return RL_ERR_INTERNAL;
}

rl_status fail(rl_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs body, translating exceptions into status codes.
template <class F>
rl_status guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return RL_OK;
  } catch (const radii::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(RL_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(RL_ERR_INTERNAL, e.what());
  }
}

radii::EquationParams params_of(const rl_params* p) {
  if (p == nullptr) return {};
  return {p->lambda, p->lambda2, p->mu};
}

#define RL_REQUIRE(ptr) \
  if ((ptr) == nullptr) return fail(RL_ERR_NULL_ARGUMENT, #ptr " must not be null")

}  // namespace

extern "C" {

const char* rl_last_error(void) { return g_last_error.c_str(); }

const char* rl_status_name(rl_status status) {
  switch (status) {
    case RL_OK: return "Ok";
    case RL_ERR_NEAR_ZERO_CONSTANT_TERM: return "NearZeroConstantTerm";
    case RL_ERR_TAIL_BOUND_UNAVAILABLE: return "TailBoundUnavailable";
    case RL_ERR_ARGUMENT_OUT_OF_RANGE: return "ArgumentOutOfRange";
    case RL_ERR_UNSUPPORTED_CLASS: return "UnsupportedClass";
    case RL_ERR_NOT_SCHWARZ_BOUNDED: return "NotSchwarzBounded";
    case RL_ERR_DEGENERATE_TRANSFORM: return "DegenerateTransform";
    case RL_ERR_ZERO_DENOMINATOR: return "ZeroDenominator";
    case RL_ERR_UNKNOWN_EQUATION: return "UnknownEquation";
    case RL_ERR_PARAM_OUT_OF_RANGE: return "ParamOutOfRange";
    case RL_ERR_NO_BRACKET_FOUND: return "NoBracketFound";
    case RL_ERR_NO_CLOSED_FORM: return "NoClosedForm";
    case RL_ERR_NO_WITNESS: return "NoWitness";
    case RL_ERR_NOT_CERTIFIED_OMEGA_A: return "NotCertifiedOmegaA";
    case RL_ERR_PARSE: return "ParseError";
    case RL_ERR_IO: return "IoError";
    case RL_ERR_NULL_ARGUMENT: return "NullArgument";
    case RL_ERR_BUFFER_TOO_SMALL: return "BufferTooSmall";
    case RL_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

rl_status rl_default_order(size_t* out) {
  RL_REQUIRE(out);
  return guarded([&] { *out = radii::default_order(); });
}

rl_status rl_function_parse(const char* spec, size_t order, rl_function** out, size_t* error_pos) {
  RL_REQUIRE(spec);
  RL_REQUIRE(out);
  *out = nullptr;
  try {
    g_last_error.clear();
    *out = new rl_function{radii::parse_function_spec(spec, order)};
    return RL_OK;
  } catch (const radii::ParseError& e) {
    if (error_pos != nullptr) *error_pos = e.position();
    return fail(RL_ERR_PARSE, e.what());
  } catch (const radii::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::exception& e) {
    return fail(RL_ERR_INTERNAL, e.what());
  }
}

void rl_function_free(rl_function* f) { delete f; }

size_t rl_function_order(const rl_function* f) { return f == nullptr ? 0 : f->rep.order(); }

rl_status rl_function_coeff(const rl_function* f, rl_side side, size_t n, double* re, double* im) {
  RL_REQUIRE(f);
  RL_REQUIRE(re);
  RL_REQUIRE(im);
  const radii::TruncatedSeries& s = side == RL_SIDE_F_OVER_Z ? f->rep.f_over_z() : f->rep.z_over_f();
  const radii::Complex c = s.coeff(n);
  *re = c.real();
  *im = c.imag();
  return RL_OK;
}

rl_status rl_function_text(const rl_function* f, char* buf, size_t cap, size_t* needed) {
  RL_REQUIRE(f);
  std::string text;
  const rl_status st = guarded([&] { text = radii::to_text(f->rep); });
  if (st != RL_OK) return st;
  if (needed != nullptr) *needed = text.size() + 1;
  if (buf == nullptr || cap < text.size() + 1) {
    return fail(RL_ERR_BUFFER_TOO_SMALL, "buffer too small for function text");
  }
  std::memcpy(buf, text.c_str(), text.size() + 1);
  return RL_OK;
}

size_t rl_catalog_count(void) { return radii::catalog_names().size(); }

const char* rl_catalog_name(size_t i) {
  const auto& names = radii::catalog_names();
  return i < names.size() ? names[i].c_str() : nullptr;
}

rl_params rl_params_default(void) { return rl_params{1.0, 1.0, 1.0}; }

size_t rl_equation_count(void) { return radii::RadiusCatalog::standard().ids().size(); }

const char* rl_equation_id(size_t i) {
  static const std::vector<std::string> ids = radii::RadiusCatalog::standard().ids();
  return i < ids.size() ? ids[i].c_str() : nullptr;
}

const char* rl_figure_equation(int figure) {
  const radii::RadiusCatalog& cat = radii::RadiusCatalog::standard();
  for (const std::string& id : cat.ids()) {
    const radii::RadiusEquation& eq = cat.at(id);
    if (eq.figure && *eq.figure == figure) return eq.id.c_str();
  }
  return nullptr;
}

rl_status rl_eval_equation(const char* id, const rl_params* params, double r, double* value) {
  RL_REQUIRE(id);
  RL_REQUIRE(value);
  return guarded([&] { *value = radii::eval_equation(id, params_of(params), r).value; });
}

rl_status rl_solve_radius(const char* id, const rl_params* params, double tol, rl_root* out) {
  RL_REQUIRE(id);
  RL_REQUIRE(out);
  return guarded([&] {
    const radii::RootResult r = radii::solve_radius(id, params_of(params), tol);
    *out = rl_root{r.root, r.lo, r.hi, r.uncertainty, r.iterations, r.clamped ? 1 : 0};
  });
}

rl_status rl_closed_form_radius(const char* id, const rl_params* params, double* out) {
  RL_REQUIRE(id);
  RL_REQUIRE(out);
  return guarded([&] { *out = radii::closed_form_radius(id, params_of(params)); });
}

rl_status rl_expected_root(const char* id, int* has_expected, double* value, double* tol) {
  RL_REQUIRE(id);
  RL_REQUIRE(has_expected);
  return guarded([&] {
    const radii::RadiusEquation& eq = radii::RadiusCatalog::standard().at(id);
    *has_expected = eq.expected_root ? 1 : 0;
    if (value != nullptr) *value = eq.expected_root.value_or(0.0);
    if (tol != nullptr) *tol = eq.expected_tol;
  });
}

const char* rl_verdict_name(rl_verdict v) {
  switch (v) {
    case RL_CERTIFIED_INSIDE: return "certified_inside";
    case RL_CERTIFIED_OUTSIDE: return "certified_outside";
    case RL_INCONCLUSIVE: return "inconclusive";
  }
  return "inconclusive";
}

rl_status rl_sup_defect(const rl_function* f, const char* class_name, double lambda, double r,
                        size_t samples, rl_defect_report* out) {
  RL_REQUIRE(f);
  RL_REQUIRE(class_name);
  RL_REQUIRE(out);
  return guarded([&] {
    const radii::ClassId cls = radii::ClassId::parse(class_name, lambda);
    const radii::DefectReport d = radii::sup_defect(f->rep, cls, r, samples);
    rl_verdict v = RL_INCONCLUSIVE;
    if (d.verdict == radii::Verdict::certified_inside) v = RL_CERTIFIED_INSIDE;
    if (d.verdict == radii::Verdict::certified_outside) v = RL_CERTIFIED_OUTSIDE;
    *out = rl_defect_report{d.radius, d.sup_sampled, d.tail_bound, cls.threshold(), v};
  });
}

rl_status rl_certificate_sufficient(const rl_function* f, const char* class_name, double lambda,
                                   rl_certificate* out) {
  RL_REQUIRE(f);
  RL_REQUIRE(class_name);
  RL_REQUIRE(out);
  return guarded([&] {
    const radii::Certificate c =
        radii::certificate_sufficient(f->rep, radii::ClassId::parse(class_name, lambda));
    *out = rl_certificate{c.value, c.bound, c.holds ? 1 : 0};
  });
}

rl_status rl_quartic_necessary(const rl_function* f, rl_certificate* out) {
  RL_REQUIRE(f);
  RL_REQUIRE(out);
  return guarded([&] {
    const radii::Certificate c = radii::quartic_necessary(f->rep);
    *out = rl_certificate{c.value, c.bound, c.holds ? 1 : 0};
  });
}

rl_status rl_area_functional(const rl_function* f, double mu, rl_certificate* out) {
  RL_REQUIRE(f);
  RL_REQUIRE(out);
  return guarded([&] {
    const radii::Certificate c = radii::area_functional(f->rep, mu);
    *out = rl_certificate{c.value, c.bound, c.holds ? 1 : 0};
  });
}

rl_status rl_bohr(const rl_function* f, rl_bohr_kind kind, double re, double im, rl_bohr_report* out) {
  RL_REQUIRE(f);
  RL_REQUIRE(out);
  return guarded([&] {
    const radii::Complex z(re, im);
    radii::BohrReport b;
    switch (kind) {
      case RL_BOHR: b = radii::bohr_quantity(f->rep, std::abs(z)); break;
      case RL_ROGOSINSKI: b = radii::rogosinski_quantity(f->rep, z); break;
      case RL_IMPROVED: b = radii::improved_quantity(f->rep, z); break;
      default: throw radii::Error(radii::ErrorCode::argument_out_of_range, "unknown Bohr kind");
    }
    *out = rl_bohr_report{b.r, b.quantity, b.tail_bound, b.distance_bound, b.satisfied ? 1 : 0};
  });
}

rl_status rl_plot_csv(const char* id, const rl_params* params, double r_min, double r_max,
                      double step, const char* path, size_t* rows) {
  RL_REQUIRE(id);
  RL_REQUIRE(path);
  return guarded([&] {
    const radii::RadiusCatalog& cat = radii::RadiusCatalog::standard();
    cat.at(id);  // reject unknown ids before touching the file system
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw radii::Error(radii::ErrorCode::io_error, std::string("cannot open '") + path + "'");
    const std::size_t n = radii::write_plot_csv(file, cat, id, params_of(params), {r_min, r_max, step});
    file.close();
    if (!file) throw radii::Error(radii::ErrorCode::io_error, std::string("failed writing '") + path + "'");
    if (rows != nullptr) *rows = n;
  });
}

rl_status rl_verify_all(size_t order, rl_verification** out) {
  RL_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    *out = new rl_verification{radii::run_verification(radii::RadiusCatalog::standard(), order)};
  });
}

void rl_verification_free(rl_verification* v) { delete v; }

size_t rl_verification_count(const rl_verification* v) { return v == nullptr ? 0 : v->records.size(); }

rl_status rl_verification_record(const rl_verification* v, size_t i, rl_record* out) {
  RL_REQUIRE(v);
  RL_REQUIRE(out);
  if (i >= v->records.size()) return fail(RL_ERR_ARGUMENT_OUT_OF_RANGE, "record index out of range");
  const radii::VerificationRecord& r = v->records[i];
  *out = rl_record{r.id.c_str(),  r.criterion,  r.description.c_str(), r.expected,
                   r.provenance.c_str(), r.computed, r.abs_diff, r.tolerance,
                   radii::to_string(r.comparison), r.pass ? 1 : 0};
  return RL_OK;
}

const char* rl_criterion_title(int criterion) {
  const auto& titles = radii::criterion_titles();
  if (criterion < 1 || criterion > static_cast<int>(titles.size())) return nullptr;
  return titles[criterion - 1].c_str();
}

}  // extern "C"
