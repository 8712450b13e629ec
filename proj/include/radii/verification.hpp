#pragma once

// The acceptance suite as data: each check yields one record, and a
// criterion passes when all of its records pass.

#include <cstddef>
#include <string>
#include <vector>

#include "radii/radius_catalog.hpp"

namespace radii {

enum class Comparison {
  equal,         ///< |computed - expected| <= tolerance
  at_most,       ///< computed <= expected + tolerance
  greater_than,  ///< computed > expected
};
const char* to_string(Comparison c) noexcept;

struct VerificationRecord {
  std::string id;           ///< "c<criterion>/<group>/<item>", unique
  int criterion = 0;
  std::string description;
  double expected = 0.0;
  std::string provenance;   ///< "published", "closed form" or "oracle"
  double computed = 0.0;
  double abs_diff = 0.0;    ///< distance on the failing side, 0 if none
  double tolerance = 0.0;
  Comparison comparison = Comparison::equal;
  bool pass = false;
};

struct CriterionSummary {
  int criterion = 0;
  std::string title;
  std::size_t records = 0;
  std::vector<std::string> failed;
  bool pass() const { return failed.empty(); }
};

/// Titles of criteria 1..9.
const std::vector<std::string>& criterion_titles();

/// Runs every check against `catalog` at the given truncation order.
/// Records come back sorted by id. A check that throws yields a failing
/// record whose description carries the error text.
std::vector<VerificationRecord> run_verification(const RadiusCatalog& catalog,
                                                 std::size_t order);

/// One entry per criterion 1..9.
std::vector<CriterionSummary> summarize(const std::vector<VerificationRecord>& records);

}  // namespace radii
