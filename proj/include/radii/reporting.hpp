#pragma once

// Plot data for radius equations.

#include <ostream>
#include <string>
#include <string_view>

#include "radii/radius_catalog.hpp"

namespace radii {

/// Shortest decimal that reads back to the same double.
std::string format_double(double x);

struct PlotRange {
  double r_min = 0.001;
  double r_max = 0.999;
  double step = 0.001;
};

/// Writes "r,value" then one row per grid point r_k = r_min + k step <= r_max.
/// Throws ArgumentOutOfRange for an empty or non-positive range or a range
/// leaving (0,1). Returns the number of data rows.
std::size_t write_plot_csv(std::ostream& out, const RadiusCatalog& catalog, std::string_view eq_id,
                           const EquationParams& params, const PlotRange& range);

}  // namespace radii
