#include "radii/function_catalog.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <functional>

#include "radii/error.hpp"

namespace radii {

namespace {

using Generator = std::function<Complex(std::size_t)>;

TruncatedSeries generated(const Generator& c, std::size_t order, Majorant tail) {
  std::vector<Complex> coeffs(order + 1);
  for (std::size_t n = 0; n <= order; ++n) coeffs[n] = c(n);
  return TruncatedSeries(std::move(coeffs), tail);
}

TruncatedSeries exact(std::vector<Complex> coeffs, std::size_t order) {
  return TruncatedSeries::polynomial(std::move(coeffs), order);
}

double sign(std::size_t n) { return n % 2 == 0 ? 1.0 : -1.0; }

// Period-6 pattern of 1/(1 -+ z + z^2).
double hexagonal(std::size_t n, bool plus) {
  static constexpr double kMinus[6] = {1, 1, 0, -1, -1, 0};  // 1/(1 - z + z^2)
  static constexpr double kPlus[6] = {1, -1, 0, 1, -1, 0};   // 1/(1 + z + z^2)
  return plus ? kPlus[n % 6] : kMinus[n % 6];
}

FunctionRep build(std::string_view name, std::size_t order) {
  const Majorant unit = Majorant::geometric(1.0, 0.0, 1.0);
  const Majorant linear = Majorant::geometric(1.0, 1.0, 1.0);
  const Majorant half = Majorant::geometric(1.0, 0.0, 0.5);
  const std::string label(name);

  if (name == "identity") {
    return FunctionRep::from_pair(exact({1.0}, order), exact({1.0}, order), label);
  }
  if (name == "koebe" || name == "koebe-neg") {
    const double s = name == "koebe" ? 1.0 : -1.0;
    return FunctionRep::from_pair(
        generated([s](std::size_t n) { return Complex(std::pow(s, n) * (n + 1.0)); }, order, linear),
        exact({1.0, -2.0 * s, 1.0}, order), label);
  }
  if (name == "z/(1-z)") {
    return FunctionRep::from_pair(generated([](std::size_t) { return Complex(1.0); }, order, unit),
                                  exact({1.0, -1.0}, order), label);
  }
  if (name == "z/(1+z)") {
    return FunctionRep::from_pair(generated([](std::size_t n) { return Complex(sign(n)); }, order, unit),
                                  exact({1.0, 1.0}, order), label);
  }
  if (name == "z/(1-z^2)" || name == "z/(1+z^2)") {
    const double s = name == "z/(1-z^2)" ? 1.0 : -1.0;
    return FunctionRep::from_pair(
        generated([s](std::size_t n) { return Complex(n % 2 ? 0.0 : std::pow(s, n / 2)); }, order, unit),
        exact({1.0, 0.0, -s}, order), label);
  }
  if (name == "z/(1-z+z^2)" || name == "z/(1+z+z^2)") {
    const bool plus = name == "z/(1+z+z^2)";
    return FunctionRep::from_pair(
        generated([plus](std::size_t n) { return Complex(hexagonal(n, plus)); }, order, unit),
        exact({1.0, plus ? 1.0 : -1.0, 1.0}, order), label);
  }
  if (name == "f1") {
    return FunctionRep::from_pair(exact({1.0, 0.5}, order),
                                  generated([](std::size_t n) { return Complex(std::pow(-0.5, n)); }, order, half),
                                  label);
  }
  if (name == "convex-half") {
    // f = z(1 - z/2)/(1 - z)^2
    return FunctionRep::from_pair(
        generated([](std::size_t n) { return Complex((n + 2.0) / 2.0); }, order, linear),
        generated(
            [](std::size_t n) {
              if (n == 0) return Complex(1.0);
              if (n == 1) return Complex(-1.5);
              return Complex(std::pow(0.5, n));
            },
            order, half),
        label);
  }
  if (name == "cexA" || name == "cexB") {
    // 1/(1 + p z + q z^3) has a simple pole at z = -1 and two poles of
    // modulus > 1, so its coefficients stay bounded by the given scale.
    const bool a = name == "cexA";
    TruncatedSeries zf = a ? exact({1.0, 2.0 / 3.0, 0.0, 1.0 / 3.0}, order)
                           : exact({1.0, 0.5, 0.0, 0.5}, order);
    TruncatedSeries fz = reciprocal(zf).with_tail(Majorant::geometric(a ? 2.0 : 3.0, 0.0, 1.0));
    return FunctionRep::from_pair(std::move(fz), std::move(zf), label);
  }
  throw ParseError(0, "unknown function name '" + label + "'");
}

std::string format_number(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::vector<Complex> parse_list(std::string_view body, std::size_t offset) {
  std::vector<Complex> out;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t end = body.find(',', pos);
    if (end == std::string_view::npos) end = body.size();
    std::string_view item = body.substr(pos, end - pos);
    std::size_t lead = 0;
    while (lead < item.size() && item[lead] == ' ') ++lead;
    item.remove_prefix(lead);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    const std::size_t where = offset + pos + lead;
    if (item.empty()) {
      if (end == body.size() && out.empty() && pos == 0) break;  // "coeffs:" alone
      throw ParseError(where, "empty coefficient");
    }
    if (item.front() == '+') item.remove_prefix(1);
    double value = 0.0;
    const auto res = std::from_chars(item.data(), item.data() + item.size(), value);
    if (res.ec != std::errc{} || res.ptr != item.data() + item.size() || !std::isfinite(value)) {
      throw ParseError(where, "malformed number '" + std::string(item) + "'");
    }
    out.emplace_back(value);
    if (end == body.size()) break;
    pos = end + 1;
  }
  return out;
}

// Regenerated text for an exact polynomial side, or empty if not applicable.
std::string polynomial_text(const char* prefix, const TruncatedSeries& s) {
  if (!s.tail() || !s.tail()->is_zero()) return {};
  std::size_t last = 0;
  for (std::size_t n = 1; n <= s.order(); ++n) {
    if (s[n].imag() != 0.0) return {};
    if (s[n] != Complex{}) last = n;
  }
  std::string out = prefix;
  for (std::size_t n = 1; n <= last; ++n) {
    if (n > 1) out += ',';
    out += format_number(s[n].real());
  }
  return out;
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {
      "identity",    "koebe",       "koebe-neg", "z/(1-z)", "z/(1+z)",
      "z/(1-z^2)",   "z/(1+z^2)",   "z/(1-z+z^2)", "z/(1+z+z^2)", "f1",
      "convex-half", "cexA",        "cexB"};
  return names;
}

const std::vector<std::string>& sz_names() {
  static const std::vector<std::string> names = {
      "identity",  "koebe",     "koebe-neg",   "z/(1-z)",    "z/(1+z)",
      "z/(1-z^2)", "z/(1+z^2)", "z/(1-z+z^2)", "z/(1+z+z^2)"};
  return names;
}

FunctionRep catalog_function(std::string_view name, std::size_t order) {
  if (order < 1) throw Error(ErrorCode::argument_out_of_range, "order must be >= 1");
  return build(name, order);
}

FunctionRep parse_function_spec(std::string_view text, std::size_t order) {
  if (order < 1) throw Error(ErrorCode::argument_out_of_range, "order must be >= 1");
  constexpr std::string_view kCoeffs = "coeffs:";
  constexpr std::string_view kZoverf = "zoverf:";
  const bool is_coeffs = text.starts_with(kCoeffs);
  if (is_coeffs || text.starts_with(kZoverf)) {
    std::vector<Complex> coeffs{1.0};
    const std::vector<Complex> tail = parse_list(text.substr(kCoeffs.size()), kCoeffs.size());
    coeffs.insert(coeffs.end(), tail.begin(), tail.end());
    TruncatedSeries given = TruncatedSeries::polynomial(std::move(coeffs), order);
    FunctionRep rep = is_coeffs ? FunctionRep::from_f_over_z(std::move(given))
                                : FunctionRep::from_z_over_f(std::move(given));
    return rep.relabeled(to_text(rep));
  }
  const auto& names = catalog_names();
  if (std::find(names.begin(), names.end(), text) == names.end()) {
    throw ParseError(0, "unknown function name '" + std::string(text) + "'");
  }
  return build(text, order);
}

std::string to_text(const FunctionRep& rep) {
  const auto& names = catalog_names();
  if (std::find(names.begin(), names.end(), rep.label()) != names.end()) return rep.label();
  if (std::string s = polynomial_text("coeffs:", rep.f_over_z()); !s.empty()) return s;
  if (std::string s = polynomial_text("zoverf:", rep.z_over_f()); !s.empty()) return s;
  return rep.label();
}

std::size_t default_order() {
  const char* env = std::getenv("RADII_LAB_ORDER");
  if (env == nullptr || *env == '\0') return kDefaultOrder;
  const std::string_view text(env);
  std::size_t value = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size() || value < 4 || value > 65536) {
    throw Error(ErrorCode::param_out_of_range,
                "RADII_LAB_ORDER must be an integer in [4, 65536], got '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace radii
