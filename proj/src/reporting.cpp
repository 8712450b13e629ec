#include "radii/reporting.hpp"

#include <charconv>
#include <cmath>

#include "radii/error.hpp"

namespace radii {

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::size_t write_plot_csv(std::ostream& out, const RadiusCatalog& catalog, std::string_view eq_id,
                           const EquationParams& params, const PlotRange& range) {
  if (!(range.step > 0.0) || !std::isfinite(range.step)) {
    throw Error(ErrorCode::argument_out_of_range, "plot step must be positive");
  }
  if (!(range.r_min > 0.0 && range.r_max < 1.0 && range.r_min <= range.r_max)) {
    throw Error(ErrorCode::argument_out_of_range, "plot range must satisfy 0 < r_min <= r_max < 1");
  }
  const RadiusEquation& eq = catalog.at(eq_id);
  // Tolerate rounding in (r_max - r_min) / step.
  const auto count = static_cast<std::size_t>(std::floor((range.r_max - range.r_min) / range.step + 1e-9)) + 1;
  out << "r,value\n";
  for (std::size_t k = 0; k < count; ++k) {
    const double r = range.r_min + static_cast<double>(k) * range.step;
    out << format_double(r) << ',' << format_double(eq.evaluate(r, params).value) << '\n';
  }
  if (!out) throw Error(ErrorCode::io_error, "failed writing plot data");
  return count;
}

}  // namespace radii
