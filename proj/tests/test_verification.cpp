#include <algorithm>
#include <set>
#include <string>

#include "doctest.h"
#include "radii/verification.hpp"

using namespace radii;

namespace {

const std::vector<VerificationRecord>& standard_records() {
  static const std::vector<VerificationRecord> records = run_verification(RadiusCatalog::standard(), 256);
  return records;
}

const VerificationRecord* find(const std::vector<VerificationRecord>& records, const std::string& id) {
  const auto it = std::find_if(records.begin(), records.end(), [&](const auto& r) { return r.id == id; });
  return it == records.end() ? nullptr : &*it;
}

}  // namespace

TEST_CASE("record ids are sorted, unique and well formed") {
  const auto& records = standard_records();
  REQUIRE_FALSE(records.empty());
  std::set<std::string> seen;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const VerificationRecord& r = records[i];
    CAPTURE(r.id);
    CHECK(seen.insert(r.id).second);
    if (i > 0) CHECK(records[i - 1].id < r.id);
    CHECK(r.id.rfind("c" + std::to_string(r.criterion) + "/", 0) == 0);
    CHECK(r.criterion >= 1);
    CHECK(r.criterion <= 9);
    CHECK_FALSE(r.description.empty());
  }
}

TEST_CASE("every criterion has records and a title") {
  const auto summary = summarize(standard_records());
  REQUIRE(summary.size() == 9);
  REQUIRE(criterion_titles().size() == 9);
  for (int c = 1; c <= 9; ++c) {
    CAPTURE(c);
    CHECK(summary[c - 1].criterion == c);
    CHECK(summary[c - 1].records > 0);
    CHECK(summary[c - 1].title == criterion_titles()[c - 1]);
  }
}

TEST_CASE("comparison semantics") {
  for (const VerificationRecord& r : standard_records()) {
    CAPTURE(r.id);
    if (r.provenance == "error") {
      CHECK_FALSE(r.pass);
      continue;
    }
    switch (r.comparison) {
      case Comparison::equal:
        CHECK(r.pass == (std::abs(r.computed - r.expected) <= r.tolerance));
        break;
      case Comparison::at_most:
        CHECK(r.pass == (r.computed <= r.expected + r.tolerance));
        break;
      case Comparison::greater_than:
        CHECK(r.pass == (r.computed > r.expected));
        break;
    }
    CHECK(r.abs_diff >= 0.0);
  }
  CHECK(std::string(to_string(Comparison::at_most)) == "at_most");
}

TEST_CASE("criteria 2 to 9 pass on the standard catalog") {
  const auto summary = summarize(standard_records());
  for (int c = 2; c <= 9; ++c) {
    CAPTURE(c);
    CHECK(summary[c - 1].pass());
  }
  for (const VerificationRecord& r : standard_records()) {
    if (r.criterion != 1 || r.id == "c1/root/t4B") continue;
    CAPTURE(r.id);
    CHECK(r.pass);
  }
}

TEST_CASE("a perturbed equation is caught") {
  RadiusCatalog cat = RadiusCatalog::standard();
  RadiusEquation t1 = cat.at("t1");
  t1.evaluate = [](double r, const EquationParams&) {
    return EquationValue{((9 * r + 16) * r + 7) * r * r - 1, false, 0.0};
  };
  cat.replace(t1);
  const auto records = run_verification(cat, 128);
  const VerificationRecord* root = find(records, "c1/root/t1");
  REQUIRE(root != nullptr);
  CHECK_FALSE(root->pass);
  CHECK(root->abs_diff > root->tolerance);
  const auto summary = summarize(records);
  CHECK_FALSE(summary[0].pass());
  CHECK(std::find(summary[0].failed.begin(), summary[0].failed.end(), "c1/root/t1") != summary[0].failed.end());
}

TEST_CASE("a throwing equation becomes a failing record") {
  RadiusCatalog cat = RadiusCatalog::standard();
  RadiusEquation eq = cat.at("dilationM");
  eq.evaluate = [](double, const EquationParams&) -> EquationValue { throw std::runtime_error("boom"); };
  cat.replace(eq);
  const auto records = run_verification(cat, 128);
  const VerificationRecord* r = find(records, "c1/root/dilationM");
  REQUIRE(r != nullptr);
  CHECK_FALSE(r->pass);
  CHECK(r->provenance == "error");
  CHECK(r->description.find("boom") != std::string::npos);
}
