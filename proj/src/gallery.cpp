// gallery.cpp -- fixtures and expectation tables.

#include "fock/gallery.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>

#include "fock/algebra.hpp"
#include "fock/operators.hpp"

namespace fock {

namespace {

std::vector<Fixture> make_fixtures() {
  std::vector<Fixture> fixtures;

  fixtures.push_back({"singleloop",
                      "one vertex, one loop; the unilateral shift picture",
                      "graph {\n"
                      "  vertices x;\n"
                      "  edge e: x -> x;\n"
                      "}\n",
                      Json{{"/kind", "graph"},
                           {"/digraph/sources", Json::array()},
                           {"/digraph/every_path_lies_on_cycle", true},
                           {"/digraph/every_cycle_has_entry", false},
                           {"/digraph/entryless_cycle", Json::array({"e"})},
                           {"/digraph/radiating_vertices", Json::array({"x"})},
                           {"/class_counts", Json::array({1, 1, 1, 1, 1, 1, 1})},
                           {"/fock/dimension", 9},
                           {"/relations/all_passed", true},
                           {"/exact", false},
                           {"/semisimplicity/verdict", "semisimple"}}});

  fixtures.push_back({"chain2",
                      "two vertices joined by one edge; exact three-dimensional Fock space",
                      "graph {\n"
                      "  vertices x1 x2;\n"
                      "  edge e1: x1 -> x2;\n"
                      "}\n",
                      Json{{"/digraph/sources", Json::array({"x1"})},
                           {"/digraph/every_cycle_has_entry", true},
                           {"/exact", true},
                           {"/exact_max_length", 1},
                           {"/commutant/fock_dimension", 3},
                           {"/commutant/all_passed", true},
                           {"/radical/dimension", 1},
                           {"/radical/consistent_with_criterion", true},
                           {"/semisimplicity/verdict", "not-semisimple"},
                           {"/semisimplicity/witness", "e1"}}});

  fixtures.push_back({"chain4",
                      "straight-line graph on four vertices",
                      "graph {\n"
                      "  vertices x1 x2 x3 x4;\n"
                      "  edge e1: x1 -> x2;\n"
                      "  edge e2: x2 -> x3;\n"
                      "  edge e3: x3 -> x4;\n"
                      "}\n",
                      Json{{"/class_counts", Json::array({4, 3, 2, 1, 0, 0, 0})},
                           {"/digraph/sources", Json::array({"x1"})},
                           {"/digraph/radiating_vertices", Json::array({"x1"})},
                           {"/exact", true},
                           {"/exact_max_length", 3},
                           {"/commutant/fock_dimension", 10},
                           {"/commutant/all_passed", true},
                           {"/radical/dimension", 6},
                           {"/radical/consistent_with_criterion", true},
                           {"/semisimplicity/verdict", "not-semisimple"},
                           {"/semisimplicity/witness", "e1"}}});

  fixtures.push_back({"ray6",
                      "length-six truncation of the one-sided infinite chain",
                      "graph {\n"
                      "  vertices x1 x2 x3 x4 x5 x6;\n"
                      "  edge e1: x1 -> x2;\n"
                      "  edge e2: x2 -> x3;\n"
                      "  edge e3: x3 -> x4;\n"
                      "  edge e4: x4 -> x5;\n"
                      "  edge e5: x5 -> x6;\n"
                      "}\n",
                      Json{{"/exact", true},
                           {"/exact_max_length", 5},
                           {"/commutant/fock_dimension", 21},
                           {"/commutant/all_passed", true},
                           {"/radical/dimension", 15},
                           {"/radical/consistent_with_criterion", true},
                           {"/semisimplicity/verdict", "not-semisimple"}}});

  fixtures.push_back({"toeplitz",
                      "loop plus an exit edge; the non-unitary isometry picture",
                      "graph {\n"
                      "  vertices v1 v2;\n"
                      "  edge e: v1 -> v1;\n"
                      "  edge f: v1 -> v2;\n"
                      "}\n",
                      Json{{"/digraph/sources", Json::array()},
                           {"/digraph/scc_count", 2},
                           {"/digraph/every_path_lies_on_cycle", false},
                           {"/digraph/cycle_cover_witness", "f"},
                           {"/digraph/every_cycle_has_entry", false},
                           {"/digraph/entryless_cycle", Json::array({"e"})},
                           {"/digraph/radiating_vertices", Json::array({"v1"})},
                           {"/class_counts", Json::array({2, 2, 2, 2, 2, 2, 2})},
                           {"/fock/dimension", 18},
                           {"/relations/all_passed", true},
                           {"/exact", false},
                           {"/semisimplicity/verdict", "not-semisimple"},
                           {"/semisimplicity/witness", "f"}}});

  fixtures.push_back({"c4",
                      "the four-cycle",
                      "graph {\n"
                      "  vertices v1 v2 v3 v4;\n"
                      "  edge e1: v1 -> v2;\n"
                      "  edge e2: v2 -> v3;\n"
                      "  edge e3: v3 -> v4;\n"
                      "  edge e4: v4 -> v1;\n"
                      "}\n",
                      Json{{"/digraph/scc_count", 1},
                           {"/digraph/every_path_lies_on_cycle", true},
                           {"/digraph/every_cycle_has_entry", false},
                           {"/digraph/entryless_cycle", Json::array({"e1", "e2", "e3", "e4"})},
                           {"/class_counts", Json::array({4, 4, 4, 4, 4, 4, 4})},
                           {"/fock/dimension", 36},
                           {"/relations/all_passed", true},
                           {"/exact", false},
                           {"/semisimplicity/verdict", "semisimple"}}});

  fixtures.push_back({"one_square",
                      "four-vertex 2-graph with a single commuting square",
                      "kgraph 2 {\n"
                      "  vertices u1 u2 u3 u4;\n"
                      "  edge b1: 1: u1 -> u2;\n"
                      "  edge b2: 1: u3 -> u4;\n"
                      "  edge r1: 2: u1 -> u3;\n"
                      "  edge r2: 2: u2 -> u4;\n"
                      "  square: b2 r1 = r2 b1;\n"
                      "}\n",
                      Json{{"/axioms/factorization_pass", true},
                           {"/class_counts", Json::array({4, 4, 1, 0, 0, 0, 0})},
                           {"/fock/dimension", 9},
                           {"/relations/all_passed", true},
                           {"/exact", true},
                           {"/exact_max_length", 2},
                           {"/commutant/fock_dimension", 9},
                           {"/commutant/all_passed", true},
                           {"/radical/dimension", 5},
                           {"/radical/consistent_with_criterion", true},
                           {"/semisimplicity/verdict", "not-semisimple"}}});

  const char* pairings_common =
      "  vertices w1 w2 w3 w4;\n"
      "  edge b1: 1: w2 -> w1;\n"
      "  edge b2: 1: w4 -> w3;\n"
      "  edge r1: 2: w1 -> w3;\n"
      "  edge r2: 2: w1 -> w3;\n"
      "  edge r3: 2: w2 -> w4;\n"
      "  edge r4: 2: w2 -> w4;\n";
  Json pairings_expected{{"/axioms/factorization_pass", true},
                        {"/class_counts", Json::array({4, 6, 2, 0, 0, 0, 0})},
                        {"/fock/dimension", 12},
                        {"/relations/all_passed", true},
                        {"/exact", true},
                        {"/exact_max_length", 2},
                        {"/commutant/all_passed", true},
                        {"/radical/dimension", 8},
                        {"/semisimplicity/verdict", "not-semisimple"}};
  fixtures.push_back({"pairing_a",
                      "one skeleton, first of its two factorization pairings",
                      std::string("kgraph 2 {\n") + pairings_common +
                          "  square: r1 b1 = b2 r3;\n"
                          "  square: r2 b1 = b2 r4;\n"
                          "}\n",
                      pairings_expected});
  fixtures.push_back({"pairing_b",
                      "the same skeleton, second pairing",
                      std::string("kgraph 2 {\n") + pairings_common +
                          "  square: r1 b1 = b2 r4;\n"
                          "  square: r2 b1 = b2 r3;\n"
                          "}\n",
                      pairings_expected});

  fixtures.push_back({"loops",
                      "one vertex, three commuting colored loops",
                      "kgraph 3 {\n"
                      "  vertices v;\n"
                      "  edge e: 1: v -> v;\n"
                      "  edge f: 2: v -> v;\n"
                      "  edge g: 3: v -> v;\n"
                      "  square: e f = f e;\n"
                      "  square: e g = g e;\n"
                      "  square: f g = g f;\n"
                      "}\n",
                      Json{{"/axioms/factorization_pass", true},
                           {"/degrees/max_classes_per_degree", 1},
                           {"/fock/dimension", 165},
                           {"/relations/all_passed", true},
                           {"/exact", false},
                           {"/semisimplicity/verdict", "semisimple"},
                           {"/reflexivity/conclusion",
                            "no vertex satisfies all three conditions; reflexivity follows"}}});

  fixtures.push_back({"omega2",
                      "finite corner of the rank-2 lattice category (3 x 2 grid)",
                      "kgraph 2 {\n"
                      "  vertices p00 p01 p10 p11 p20 p21;\n"
                      "  edge h00: 1: p10 -> p00;\n"
                      "  edge h01: 1: p11 -> p01;\n"
                      "  edge h10: 1: p20 -> p10;\n"
                      "  edge h11: 1: p21 -> p11;\n"
                      "  edge v0: 2: p01 -> p00;\n"
                      "  edge v1: 2: p11 -> p10;\n"
                      "  edge v2: 2: p21 -> p20;\n"
                      "  square: h00 v1 = v0 h01;\n"
                      "  square: h10 v2 = v1 h11;\n"
                      "}\n",
                      Json{{"/axioms/factorization_pass", true},
                           {"/exact", true},
                           {"/exact_max_length", 3},
                           {"/commutant/fock_dimension", 18},
                           {"/commutant/all_passed", true},
                           {"/radical/dimension", 12},
                           {"/radical/consistent_with_criterion", true},
                           {"/semisimplicity/verdict", "not-semisimple"}}});

  fixtures.push_back({"c3_2",
                      "higher-rank cyclic graph: three vertices, one loop lane per color",
                      "kgraph 2 {\n"
                      "  vertices v1 v2 v3;\n"
                      "  edge a1: 1: v1 -> v2;\n"
                      "  edge a2: 1: v2 -> v3;\n"
                      "  edge a3: 1: v3 -> v1;\n"
                      "  edge b1: 2: v1 -> v2;\n"
                      "  edge b2: 2: v2 -> v3;\n"
                      "  edge b3: 2: v3 -> v1;\n"
                      "  square: a2 b1 = b2 a1;\n"
                      "  square: a3 b2 = b3 a2;\n"
                      "  square: a1 b3 = b1 a3;\n"
                      "}\n",
                      Json{{"/axioms/factorization_pass", true},
                           {"/fock/dimension", 135},
                           {"/relations/all_passed", true},
                           {"/exact", false},
                           {"/semisimplicity/verdict", "semisimple"},
                           {"/reflexivity/conclusion",
                            "no vertex satisfies all three conditions; reflexivity follows"}}});

  fixtures.push_back({"parallel_pairs",
                      "two parallel pairs with identifications; not a 2-graph",
                      "category {\n"
                      "  vertices x1 x2 x3;\n"
                      "  edge a1: x1 -> x2;\n"
                      "  edge b1: x1 -> x2;\n"
                      "  edge a2: x2 -> x3;\n"
                      "  edge b2: x2 -> x3;\n"
                      "  relation: b2 a1 = a2 b1;\n"
                      "  relation: a2 a1 = b2 b1;\n"
                      "  degree a1 = (1);\n"
                      "  degree b1 = (1);\n"
                      "  degree a2 = (1);\n"
                      "  degree b2 = (1);\n"
                      "}\n",
                      Json{{"/axioms/confluent", true},
                           {"/axioms/cancellation_pass", true},
                           {"/axioms/no_inverses_pass", true},
                           {"/axioms/degree_functor_non_degenerate", true},
                           {"/class_counts", Json::array({3, 4, 2, 0, 0, 0, 0})},
                           {"/fock/dimension", 9},
                           {"/relations/all_passed", true},
                           {"/exact", true},
                           {"/exact_max_length", 2},
                           {"/commutant/all_passed", true},
                           {"/radical/dimension", 6},
                           {"/radical/consistent_with_criterion", true},
                           {"/semisimplicity/verdict", "not-semisimple"}}});

  fixtures.push_back({"threeloop",
                      "three loops with cyclic identifications; three classes per length",
                      "category {\n"
                      "  vertices x;\n"
                      "  edge a: x -> x;\n"
                      "  edge b: x -> x;\n"
                      "  edge c: x -> x;\n"
                      "  relation: a b = b c;\n"
                      "  relation: b c = c a;\n"
                      "  relation: a c = c b;\n"
                      "  relation: c b = b a;\n"
                      "  relation: a a = b b;\n"
                      "  relation: b b = c c;\n"
                      "  degree a = (1);\n"
                      "  degree b = (1);\n"
                      "  degree c = (1);\n"
                      "}\n",
                      Json{{"/axioms/confluent", true},
                           {"/axioms/rule_count", 6},
                           {"/axioms/cancellation_pass", true},
                           {"/axioms/no_inverses_pass", true},
                           {"/axioms/degree_functor_non_degenerate", true},
                           {"/class_counts", Json::array({1, 3, 3, 3, 3, 3, 3})},
                           {"/fock/dimension", 25},
                           {"/relations/all_passed", true},
                           {"/exact", false},
                           {"/semisimplicity/verdict", "semisimple"},
                           {"/extras/nilpotent_combination_index", 2},
                           {"/extras/nilpotent_combination_exact", true}}});

  return fixtures;
}

// The roots-of-unity combination L_a + w L_b + w^2 L_c for single-vertex
// three-generator categories; index and exactness per nilpotency_index.
void add_threeloop_extras(Structure& structure, const AnalysisOptions& options, Json& actual) {
  PathCategory& cat = *structure.category;
  cat.ensure_verified(6);
  FockBasis basis(cat, 6);
  Complex omega = std::polar(1.0, 2.0 * M_PI / 3.0);
  SparseMatrix t = left_creation(basis, Word::generator(0)) +
                   SparseMatrix(omega * left_creation(basis, Word::generator(1))) +
                   SparseMatrix(omega * omega * left_creation(basis, Word::generator(2)));
  auto nil = nilpotency_index(basis, cat, t, 8, options.tolerance);
  actual["extras"] = {{"nilpotent_combination_index", nil.index ? Json(*nil.index) : Json()},
                      {"nilpotent_combination_exact", nil.exact}};
}

}  // namespace

const std::vector<Fixture>& gallery_fixtures() {
  static const std::vector<Fixture> fixtures = make_fixtures();
  return fixtures;
}

const Fixture* find_fixture(const std::string& name) {
  for (const auto& f : gallery_fixtures())
    if (f.name == name) return &f;
  return nullptr;
}

FixtureResult run_fixture(const Fixture& fixture, const AnalysisOptions& options) {
  FixtureResult result;
  result.name = fixture.name;
  result.diffs = Json::array();

  auto loaded = load_structure(fixture.dsl, "gallery", options);
  if (auto* failure = std::get_if<CommandResult>(&loaded)) {
    result.passed = false;
    result.diffs.push_back({{"pointer", "/"}, {"expected", "parses and validates"},
                            {"actual", (*failure).report}});
    return result;
  }
  Structure& structure = std::get<Structure>(loaded);
  result.actual = analyze_structure(structure, options);
  if (fixture.name == "threeloop") add_threeloop_extras(structure, options, result.actual);

  for (const auto& [pointer, expected] : fixture.expected.items()) {
    Json actual;
    try {
      actual = result.actual.at(Json::json_pointer(pointer));
    } catch (const Json::exception&) {
      actual = "(missing)";
    }
    if (actual != expected) {
      result.passed = false;
      result.diffs.push_back({{"pointer", pointer}, {"expected", expected}, {"actual", actual}});
    }
  }
  return result;
}

CommandResult run_gallery(const std::optional<std::string>& only, bool list_only,
                          const std::optional<std::string>& export_dir,
                          const AnalysisOptions& options) {
  CommandResult result;
  std::string digest_input;
  for (const auto& f : gallery_fixtures()) digest_input += f.dsl;
  result.report = report_skeleton("gallery", digest_input, ReportOptions{
      options.max_length, options.truncation, options.tolerance, options.seed});

  if (list_only) {
    Json list = Json::array();
    for (const auto& f : gallery_fixtures())
      list.push_back({{"name", f.name}, {"description", f.description}});
    result.report["findings"].push_back({{"fixtures", list}});
    return result;
  }

  if (export_dir) {
    std::filesystem::create_directories(*export_dir);
    Json exported = Json::array();
    for (const auto& f : gallery_fixtures()) {
      std::filesystem::path path = std::filesystem::path(*export_dir) / (f.name + ".fsg");
      std::ofstream out(path);
      out << f.dsl;
      exported.push_back(path.string());
    }
    result.report["findings"].push_back({{"exported", exported}});
    return result;
  }

  bool all_passed = true;
  Json runs = Json::array();
  for (const auto& f : gallery_fixtures()) {
    if (only && f.name != *only) continue;
    FixtureResult fr = run_fixture(f, options);
    all_passed = all_passed && fr.passed;
    Json entry;
    entry["name"] = fr.name;
    entry["passed"] = fr.passed;
    entry["expectations"] = static_cast<int>(f.expected.size());
    if (!fr.passed) entry["diffs"] = fr.diffs;
    runs.push_back(std::move(entry));
  }
  if (only && runs.empty()) {
    result.report["verdicts"].push_back(verdict_entry("fixture lookup", "fail",
                                                      Json::array({*only}), Json(),
                                                      "requested fixture exists"));
    result.exit_code = 2;
    return result;
  }
  result.report["findings"].push_back({{"fixtures", runs}});
  result.report["verdicts"].push_back(
      verdict_entry("gallery expectations", all_passed ? "pass" : "fail", Json::array(), Json(),
                    "every fixture matches its expected property table"));
  result.exit_code = all_passed ? 0 : 1;
  return result;
}

}  // namespace fock
