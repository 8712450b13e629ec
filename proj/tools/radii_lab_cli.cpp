// radii-lab: command-line front end over the C interface.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "radii_lab.h"

namespace {

using nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitIo = 4;

int exit_code_for(rl_status st) {
  switch (st) {
    case RL_OK: return kExitPass;
    case RL_ERR_UNKNOWN_EQUATION:
    case RL_ERR_PARAM_OUT_OF_RANGE:
    case RL_ERR_ARGUMENT_OUT_OF_RANGE:
    case RL_ERR_UNSUPPORTED_CLASS:
    case RL_ERR_PARSE:
    case RL_ERR_NULL_ARGUMENT:
    case RL_ERR_NO_CLOSED_FORM:
    case RL_ERR_NO_WITNESS:
      return kExitUsage;
    case RL_ERR_IO: return kExitIo;
    default: return kExitNumerical;
  }
}

int report_error(rl_status st) {
  std::cerr << "radii-lab: " << rl_status_name(st) << ": " << rl_last_error() << '\n';
  return exit_code_for(st);
}

// JSON has no representation for inf/nan; emit null for those.
ordered_json num(double x) { return std::isfinite(x) ? ordered_json(x) : ordered_json(nullptr); }

void print_json(const ordered_json& j) { std::cout << j.dump(2) << '\n'; }

struct FunctionDeleter {
  void operator()(rl_function* f) const { rl_function_free(f); }
};
using FunctionPtr = std::unique_ptr<rl_function, FunctionDeleter>;

struct VerificationDeleter {
  void operator()(rl_verification* v) const { rl_verification_free(v); }
};

struct Options {
  std::string eq;
  std::optional<double> lambda;
  std::optional<double> lambda2;
  std::optional<double> mu;
  std::string function;
  std::string class_name = "M";
  double r = 0.99;
  std::size_t samples = 4096;
  std::optional<std::size_t> order;
  double tol = 1e-12;
  bool json = false;
  std::string out;
  double r_min = 0.001;
  double r_max = 0.999;
  double step = 0.001;
  std::optional<int> figure;
};

rl_params params_of(const Options& o) {
  rl_params p = rl_params_default();
  if (o.lambda) p.lambda = *o.lambda;
  if (o.lambda2) p.lambda2 = *o.lambda2;
  if (o.mu) p.mu = *o.mu;
  return p;
}

rl_status resolve_order(const Options& o, std::size_t& order) {
  if (o.order) {
    order = *o.order;
    return RL_OK;
  }
  return rl_default_order(&order);
}

int cmd_radius(const Options& o) {
  const rl_params p = params_of(o);
  rl_root root{};
  if (const rl_status st = rl_solve_radius(o.eq.c_str(), &p, o.tol, &root); st != RL_OK) {
    return report_error(st);
  }
  ordered_json j;
  j["schema"] = 1;
  j["eq_id"] = o.eq;
  j["params"] = {{"lambda", p.lambda}, {"lambda2", p.lambda2}, {"mu", p.mu}};
  j["root"] = root.root;
  j["tol"] = o.tol;
  j["uncertainty"] = root.uncertainty;
  j["iterations"] = root.iterations;
  j["clamped"] = root.clamped != 0;
  int has_expected = 0;
  double expected = 0.0, expected_tol = 0.0;
  if (rl_expected_root(o.eq.c_str(), &has_expected, &expected, &expected_tol) == RL_OK && has_expected) {
    j["expected"] = expected;
    j["expected_tol"] = expected_tol;
  } else {
    j["expected"] = nullptr;
  }
  double closed = 0.0;
  if (rl_closed_form_radius(o.eq.c_str(), &p, &closed) == RL_OK) j["closed_form"] = closed;
  print_json(j);
  return kExitPass;
}

int cmd_membership(const Options& o) {
  std::size_t order = 0;
  if (const rl_status st = resolve_order(o, order); st != RL_OK) return report_error(st);

  rl_function* raw = nullptr;
  std::size_t pos = 0;
  if (const rl_status st = rl_function_parse(o.function.c_str(), order, &raw, &pos); st != RL_OK) {
    return report_error(st);
  }
  const FunctionPtr f(raw);
  const double lambda = o.lambda.value_or(1.0);

  ordered_json j;
  j["schema"] = 1;
  std::vector<char> text(256);
  std::size_t needed = 0;
  if (rl_function_text(f.get(), text.data(), text.size(), &needed) == RL_ERR_BUFFER_TOO_SMALL) {
    text.resize(needed);
    rl_function_text(f.get(), text.data(), text.size(), &needed);
  }
  j["function"] = std::string(text.data());
  j["class"] = o.class_name;
  j["lambda"] = lambda;
  j["order"] = order;
  j["r"] = o.r;
  j["samples"] = o.samples;

  rl_defect_report d{};
  const rl_status st = rl_sup_defect(f.get(), o.class_name.c_str(), lambda, o.r, o.samples, &d);
  if (st != RL_OK && exit_code_for(st) == kExitUsage) return report_error(st);
  if (st == RL_OK) {
    j["verdict"] = rl_verdict_name(d.verdict);
    j["sup_sampled"] = num(d.sup_sampled);
    j["tail_bound"] = num(d.tail_bound);
    j["threshold"] = d.threshold;
  } else {
    j["verdict"] = nullptr;
    j["error"] = std::string(rl_status_name(st)) + ": " + rl_last_error();
  }

  ordered_json certs = ordered_json::object();
  rl_certificate c{};
  if (o.class_name == "M" || o.class_name == "OmegaA") {
    if (rl_certificate_sufficient(f.get(), o.class_name.c_str(), lambda, &c) == RL_OK) {
      certs["sum_sufficient"] = {{"value", num(c.value)}, {"bound", c.bound}, {"holds", c.holds != 0}};
    } else {
      certs["sum_sufficient"] = {{"error", rl_last_error()}};
    }
  }
  if (o.class_name == "M" && rl_quartic_necessary(f.get(), &c) == RL_OK) {
    certs["quartic_necessary"] = {{"value", num(c.value)}, {"bound", c.bound}, {"holds", c.holds != 0}};
  }
  j["certificates"] = certs;
  print_json(j);
  return st == RL_OK ? kExitPass : exit_code_for(st);
}

int cmd_verify_all(const Options& o) {
  std::size_t order = 0;
  if (const rl_status st = resolve_order(o, order); st != RL_OK) return report_error(st);
  rl_verification* raw = nullptr;
  if (const rl_status st = rl_verify_all(order, &raw); st != RL_OK) return report_error(st);
  const std::unique_ptr<rl_verification, VerificationDeleter> v(raw);

  const std::size_t n = rl_verification_count(v.get());
  std::vector<rl_record> records(n);
  bool all_pass = true;
  for (std::size_t i = 0; i < n; ++i) {
    rl_verification_record(v.get(), i, &records[i]);
    all_pass = all_pass && records[i].pass;
  }

  if (o.json) {
    ordered_json j;
    j["schema"] = 1;
    j["order"] = order;
    j["pass"] = all_pass;
    ordered_json rows = ordered_json::array();
    for (const rl_record& r : records) {
      rows.push_back({{"id", r.id},
                      {"criterion", r.criterion},
                      {"description", r.description},
                      {"expected", num(r.expected)},
                      {"provenance", r.provenance},
                      {"computed", num(r.computed)},
                      {"abs_diff", num(r.abs_diff)},
                      {"tolerance", num(r.tolerance)},
                      {"comparison", r.comparison},
                      {"pass", r.pass != 0}});
    }
    j["records"] = rows;
    print_json(j);
  } else {
    for (const rl_record& r : records) {
      std::printf("%-4s %-40s computed=%-24.17g expected=%-14.10g %s tol=%.1e\n", r.pass ? "PASS" : "FAIL",
                  r.id, r.computed, r.expected, r.comparison, r.tolerance);
    }
    std::printf("\n");
    for (int c = 1; rl_criterion_title(c) != nullptr; ++c) {
      std::size_t rows = 0, failed = 0;
      for (const rl_record& r : records) {
        if (r.criterion != c) continue;
        ++rows;
        failed += r.pass ? 0 : 1;
      }
      std::printf("criterion %d %-28s %s (%zu/%zu)\n", c, rl_criterion_title(c),
                  failed == 0 && rows > 0 ? "PASS" : "FAIL", rows - failed, rows);
    }
    std::printf("%s\n", all_pass ? "all checks passed" : "some checks failed");
  }
  return all_pass ? kExitPass : kExitFail;
}

int cmd_plot(const Options& o) {
  std::string eq = o.eq;
  if (o.figure) {
    const char* id = rl_figure_equation(*o.figure);
    if (id == nullptr) {
      std::cerr << "radii-lab: no figure " << *o.figure << '\n';
      return kExitUsage;
    }
    if (!eq.empty() && eq != id) {
      std::cerr << "radii-lab: --figure " << *o.figure << " plots " << id << ", not " << eq << '\n';
      return kExitUsage;
    }
    eq = id;
  }
  if (eq.empty()) {
    std::cerr << "radii-lab: plot needs --eq or --figure\n";
    return kExitUsage;
  }
  const rl_params p = params_of(o);
  std::size_t rows = 0;
  if (const rl_status st = rl_plot_csv(eq.c_str(), &p, o.r_min, o.r_max, o.step, o.out.c_str(), &rows);
      st != RL_OK) {
    return report_error(st);
  }
  if (o.json) {
    ordered_json j;
    j["schema"] = 1;
    j["eq_id"] = eq;
    j["out"] = o.out;
    j["rows"] = rows;
    print_json(j);
  }
  return kExitPass;
}

void add_params(CLI::App* cmd, Options& o) {
  cmd->add_option("--lambda", o.lambda, "Parameter lambda");
  cmd->add_option("--lambda2", o.lambda2, "Parameter lambda'");
  cmd->add_option("--mu", o.mu, "Parameter mu");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Radius constants, class membership and Bohr checks for normalized analytic functions"};
  app.require_subcommand(1);
  Options o;

  CLI::App* radius = app.add_subcommand("radius", "Smallest root of a catalog equation");
  radius->add_option("--eq", o.eq, "Equation id")->required();
  add_params(radius, o);
  radius->add_option("--tol", o.tol, "Bisection tolerance (>= 1e-14)")->capture_default_str();
  radius->add_flag("--json", o.json, "JSON output (always on for this command)");

  CLI::App* membership = app.add_subcommand("membership", "Defect sup and certificates for a function");
  membership->add_option("--f", o.function, "Catalog name, coeffs:a2,... or zoverf:b1,...")->required();
  membership->add_option("--class", o.class_name, "M, U, P, Omega or OmegaA")->capture_default_str();
  membership->add_option("--lambda", o.lambda, "Class parameter lambda");
  membership->add_option("--r", o.r, "Sampling radius in (0,1)")->capture_default_str();
  membership->add_option("--samples", o.samples, "Circle samples (>= 8)")->capture_default_str();
  membership->add_option("--order", o.order, "Truncation order");
  membership->add_flag("--json", o.json, "JSON output (always on for this command)");

  CLI::App* verify = app.add_subcommand("verify-all", "Run the full verification suite");
  verify->add_option("--order", o.order, "Truncation order");
  verify->add_flag("--json", o.json, "Machine-readable records");

  CLI::App* plot = app.add_subcommand("plot", "Write r,value CSV for a catalog equation");
  plot->add_option("--eq", o.eq, "Equation id");
  plot->add_option("--figure", o.figure, "Figure number 1-9 instead of --eq");
  add_params(plot, o);
  plot->add_option("--rmin", o.r_min, "First grid point")->capture_default_str();
  plot->add_option("--rmax", o.r_max, "Last grid point")->capture_default_str();
  plot->add_option("--step", o.step, "Grid step")->capture_default_str();
  plot->add_option("--out", o.out, "Output CSV path")->required();
  plot->add_flag("--json", o.json, "Print a JSON summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*radius) return cmd_radius(o);
  if (*membership) return cmd_membership(o);
  if (*verify) return cmd_verify_all(o);
  if (*plot) return cmd_plot(o);
  return kExitUsage;
}
