#pragma once

// Named functions and the text grammar for function specifications:
//   <catalog name> | "coeffs:a2,a3,..." | "zoverf:b1,b2,..."

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "radii/series.hpp"

namespace radii {

/// All thirteen catalog names, in a fixed order.
const std::vector<std::string>& catalog_names();

/// The nine univalent functions with integer coefficients.
const std::vector<std::string>& sz_names();

/// Catalog function at the given order, both sides with tail majorants.
/// Throws ParseError for an unknown name.
FunctionRep catalog_function(std::string_view name, std::size_t order);

/// Parses the grammar above. The side given explicitly is an exact
/// polynomial; the other side comes from long division and has no majorant.
FunctionRep parse_function_spec(std::string_view text, std::size_t order);

/// Catalog name, or a regenerated coeffs:/zoverf: form for an exact
/// polynomial side; otherwise the stored label.
std::string to_text(const FunctionRep& rep);

/// RADII_LAB_ORDER if set (an integer in [4, 65536]), else 256.
/// Throws ParamOutOfRange for a malformed value.
std::size_t default_order();

}  // namespace radii
