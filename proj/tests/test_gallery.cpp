// Fixture integrity and expectation tables.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fock/gallery.hpp"

using namespace fock;

TEST_CASE("every fixture parses, validates, and passes its axioms at bound six") {
  AnalysisOptions options;
  for (const auto& fixture : gallery_fixtures()) {
    CAPTURE(fixture.name);
    auto parsed = parse(fixture.dsl);
    REQUIRE(parsed.file.has_value());
    auto built = build_structure(*parsed.file);
    REQUIRE(std::holds_alternative<std::unique_ptr<PathCategory>>(built));
    auto& cat = *std::get<std::unique_ptr<PathCategory>>(built);
    CHECK_NOTHROW(cat.ensure_verified(6));
  }
}

TEST_CASE("fixture names are unique and lookup works") {
  std::set<std::string> names;
  for (const auto& fixture : gallery_fixtures()) names.insert(fixture.name);
  CHECK(names.size() == gallery_fixtures().size());
  CHECK(find_fixture("one_square") != nullptr);
  CHECK(find_fixture("missing") == nullptr);
}

TEST_CASE("single-square fixture has the nine-dimensional path space") {
  AnalysisOptions options;
  auto result = run_fixture(*find_fixture("one_square"), options);
  CHECK(result.passed);
  CHECK(result.actual["fock"]["dimension"] == 9);
}

TEST_CASE("three-loop fixture reports the exact nilpotent combination") {
  AnalysisOptions options;
  auto result = run_fixture(*find_fixture("threeloop"), options);
  CHECK(result.passed);
  CHECK(result.actual["extras"]["nilpotent_combination_index"] == 2);
  CHECK(result.actual["extras"]["nilpotent_combination_exact"] == true);
}

TEST_CASE("cycle fixture pairs semisimplicity with an entryless cycle") {
  AnalysisOptions options;
  auto result = run_fixture(*find_fixture("c4"), options);
  CHECK(result.passed);
  CHECK(result.actual["semisimplicity"]["verdict"] == "semisimple");
  CHECK(result.actual["digraph"]["every_cycle_has_entry"] == false);
}

TEST_CASE("the full gallery passes") {
  AnalysisOptions options;
  auto result = run_gallery(std::nullopt, false, std::nullopt, options);
  CHECK(result.exit_code == 0);
  for (const auto& entry : result.report["findings"][0]["fixtures"]) {
    CAPTURE(entry["name"].get<std::string>());
    CHECK(entry["passed"] == true);
  }
}
