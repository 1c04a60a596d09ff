// gallery.hpp -- built-in fixtures for the worked examples, with expected
// property tables.  Expected values are JSON pointers into the analysis
// output so a fixture run is a subset comparison.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fock/analysis.hpp"

namespace fock {

struct Fixture {
  std::string name;
  std::string description;
  std::string dsl;
  Json expected;  // JSON pointer -> expected value
};

const std::vector<Fixture>& gallery_fixtures();
const Fixture* find_fixture(const std::string& name);

struct FixtureResult {
  std::string name;
  bool passed = true;
  Json diffs;   // [{pointer, expected, actual}]
  Json actual;  // the analysis output (plus fixture extras)
};

FixtureResult run_fixture(const Fixture& fixture, const AnalysisOptions& options);

CommandResult run_gallery(const std::optional<std::string>& only, bool list_only,
                          const std::optional<std::string>& export_dir,
                          const AnalysisOptions& options);

}  // namespace fock
