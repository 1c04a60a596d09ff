// Rewriting, confluence, cancellation, inverses, degree functors, minimal
// paths, and the non-nilpotency falsifier.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "fock/presentation.hpp"
#include "fock/rng.hpp"
#include "fock/symbolic.hpp"

using namespace fock;

namespace {

// One vertex x; loops a b c; ab = bc = ca, ac = cb = ba, aa = bb = cc.
CategoryPresentation threeloop() {
  CategoryPresentation pres;
  pres.vertices = {"x"};
  for (const char* id : {"a", "b", "c"})
    pres.generators.push_back({id, 0, 0, 0, MultiDegree({1})});
  pres.has_degree = true;
  pres.rank = 1;
  auto word = [](std::vector<int32_t> gens) { return Word::from_generators(std::move(gens)); };
  pres.relations = {{word({0, 1}), word({1, 2})}, {word({1, 2}), word({2, 0})},
                    {word({0, 2}), word({2, 1})}, {word({2, 1}), word({1, 0})},
                    {word({0, 0}), word({1, 1})}, {word({1, 1}), word({2, 2})}};
  return pres;
}

// x1 -> x2 -> x3 with parallel pairs and two identifications.
CategoryPresentation parallel_pairs() {
  CategoryPresentation pres;
  pres.vertices = {"x1", "x2", "x3"};
  pres.generators = {{"a1", 0, 1, 0, MultiDegree({1})},
                     {"b1", 0, 1, 0, MultiDegree({1})},
                     {"a2", 1, 2, 0, MultiDegree({1})},
                     {"b2", 1, 2, 0, MultiDegree({1})}};
  pres.has_degree = true;
  pres.rank = 1;
  // b2 a1 = a2 b1 and a2 a1 = b2 b1.
  pres.relations = {{Word::from_generators({3, 0}), Word::from_generators({2, 1})},
                    {Word::from_generators({2, 0}), Word::from_generators({3, 1})}};
  return pres;
}

CategoryPresentation free_loop() {
  CategoryPresentation pres;
  pres.vertices = {"x"};
  pres.generators = {{"e", 0, 0, 0, MultiDegree({1})}};
  pres.has_degree = true;
  pres.rank = 1;
  return pres;
}

std::string rule_string(const CategoryPresentation& pres, const RewriteRule& rule) {
  auto side = [&pres](const Word& w) {
    if (w.is_vertex()) return pres.vertices[w.anchor()];
    std::string s;
    for (int i = 0; i < w.length(); ++i) s += pres.generators[w.gen(i)].id;
    return s;
  };
  return side(rule.lhs) + ">" + side(rule.rhs);
}

}  // namespace

TEST_CASE("rule orientation and completion for the three-loop category") {
  CategoryPresentation pres = threeloop();
  RewriteSystem rs = build_rewriting_system(pres);
  std::set<std::string> rules;
  for (const auto& rule : rs.rules()) rules.insert(rule_string(pres, rule));
  CHECK(rules == std::set<std::string>{"ab>ca", "ac>ba", "bc>ca", "cb>ba", "bb>aa", "cc>aa"});
  CHECK(rs.complete());
}

TEST_CASE("two rules for the parallel-pair category; empty and degenerate cases") {
  CategoryPresentation pres = parallel_pairs();
  RewriteSystem rs = build_rewriting_system(pres);
  CHECK(rs.rules().size() == 2);
  CHECK(rs.complete());

  RewriteSystem empty = build_rewriting_system(free_loop());
  CHECK(empty.rules().empty());

  CategoryPresentation trivial = free_loop();
  trivial.relations.push_back({Word::generator(0), Word::generator(0)});
  RewriteSystem dropped = build_rewriting_system(trivial);
  CHECK(dropped.rules().empty());
  CHECK(dropped.warnings().size() == 1);
}

TEST_CASE("normal forms are idempotent and endpoint- and degree-preserving") {
  CategoryPresentation pres = threeloop();
  RewriteSystem rs = build_rewriting_system(pres);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int len = uniform_int(rng, 1, 6);
    std::vector<int32_t> gens;
    for (int i = 0; i < len; ++i) gens.push_back(uniform_int(rng, 0, 2));
    Word w = Word::from_generators(gens);
    Word nf = rs.normalize(w);
    CHECK(rs.normalize(nf) == nf);
    CHECK(nf.length() == w.length());  // all relations here preserve length
  }

  Word vertex = Word::vertex(0);
  CHECK(rs.normalize(vertex) == vertex);
}

TEST_CASE("the 27 three-letter words fall into exactly three classes") {
  CategoryPresentation pres = threeloop();
  RewriteSystem rs = build_rewriting_system(pres);
  std::set<Word> normal_forms;
  for (int32_t i = 0; i < 3; ++i)
    for (int32_t j = 0; j < 3; ++j)
      for (int32_t k = 0; k < 3; ++k)
        normal_forms.insert(rs.normalize(Word::from_generators({i, j, k})));
  // a^3, b a^2, c a^2.
  CHECK(normal_forms == std::set<Word>{Word::from_generators({0, 0, 0}),
                                       Word::from_generators({1, 0, 0}),
                                       Word::from_generators({2, 0, 0})});
}

TEST_CASE("the reduced form of cb lies in the stated class set") {
  CategoryPresentation pres = threeloop();
  RewriteSystem rs = build_rewriting_system(pres);
  Word cb = Word::from_generators({2, 1});
  std::set<Word> expected{Word::from_generators({0, 0}), Word::from_generators({1, 0}),
                          Word::from_generators({2, 0})};  // a^2, ba, ca
  CHECK(expected.count(rs.normalize(cb)) == 1);
  CHECK(rs.normalize(cb) == Word::from_generators({1, 0}));  // ba
}

TEST_CASE("confluence oracle") {
  CategoryPresentation pres = threeloop();
  RewriteSystem rs = build_rewriting_system(pres);
  auto report = check_confluence(pres, rs, 6);
  CHECK(report.confluent);
  CHECK(report.words_checked > 1000);

  CategoryPresentation cp = parallel_pairs();
  RewriteSystem cp_rs = build_rewriting_system(cp);
  CHECK(check_confluence(cp, cp_rs, 4).confluent);

  // ab = a is orientable and trivially confluent (one rule).
  CategoryPresentation shrink = free_loop();
  shrink.generators.push_back({"a", 0, 0, 0, MultiDegree({1})});
  shrink.relations.push_back({Word::from_generators({1, 0}), Word::generator(1)});
  RewriteSystem shrink_rs = build_rewriting_system(shrink);
  CHECK(check_confluence(shrink, shrink_rs, 4).confluent);
}

TEST_CASE("relation chains respect normal forms") {
  CategoryPresentation pres = threeloop();
  RewriteSystem rs = build_rewriting_system(pres);
  // Walk random bidirectional relation applications; normal forms must agree.
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<int32_t> gens;
    int len = uniform_int(rng, 2, 6);
    for (int i = 0; i < len; ++i) gens.push_back(uniform_int(rng, 0, 2));
    Word w = Word::from_generators(gens);
    Word nf = rs.normalize(w);
    Word current = w;
    for (int step = 0; step < 10; ++step) {
      // Apply a random relation at a random position in either direction.
      const auto& rel = pres.relations[uniform_int(rng, 0, pres.relations.size() - 1)];
      bool forward = uniform_int(rng, 0, 1) == 1;
      const Word& from = forward ? rel.lhs : rel.rhs;
      const Word& to = forward ? rel.rhs : rel.lhs;
      std::vector<int> positions;
      for (int pos = 0; pos + from.length() <= current.length(); ++pos) {
        bool match = true;
        for (int i = 0; i < from.length(); ++i)
          if (current.gen(pos + i) != from.gen(i)) match = false;
        if (match) positions.push_back(pos);
      }
      if (positions.empty()) continue;
      int pos = positions[uniform_int(rng, 0, positions.size() - 1)];
      std::vector<int32_t> next(current.gens().begin(), current.gens().end());
      for (int i = 0; i < from.length(); ++i) next[pos + i] = to.gen(i);
      current = Word::from_generators(next);
    }
    CHECK(rs.normalize(current) == nf);
  }
}

TEST_CASE("cancellation holds for the gallery categories and fails when planted") {
  CategoryPresentation pres = threeloop();
  RewriteSystem rs = build_rewriting_system(pres);
  CHECK(check_cancellation(pres, rs, 5).passed);

  CategoryPresentation cp = parallel_pairs();
  RewriteSystem cp_rs = build_rewriting_system(cp);
  CHECK(check_cancellation(cp, cp_rs, 4).passed);

  CHECK(check_cancellation(free_loop(), build_rewriting_system(free_loop()), 5).passed);

  // ab = ac with b != c breaks left cancellation with witness (a; b, c).
  CategoryPresentation planted;
  planted.vertices = {"v"};
  planted.generators = {{"a", 0, 0, 0, MultiDegree({1})},
                        {"b", 0, 0, 0, MultiDegree({1})},
                        {"c", 0, 0, 0, MultiDegree({1})}};
  planted.relations = {{Word::from_generators({0, 1}), Word::from_generators({0, 2})}};
  RewriteSystem planted_rs = build_rewriting_system(planted);
  auto report = check_cancellation(planted, planted_rs, 4);
  CHECK_FALSE(report.passed);
  CHECK(report.side == "left");
  REQUIRE(report.alpha.has_value());
  CHECK(*report.alpha == Word::generator(0));
  CHECK(std::set<Word>{*report.beta, *report.gamma} ==
        std::set<Word>{Word::generator(1), Word::generator(2)});
}

TEST_CASE("no-inverses holds unless an identity relation is planted") {
  CategoryPresentation pres = threeloop();
  RewriteSystem rs = build_rewriting_system(pres);
  CHECK(check_no_inverses(pres, rs, 5).passed);
  CHECK(check_no_inverses(free_loop(), build_rewriting_system(free_loop()), 5).passed);

  // ab = v makes a and b mutually inverse.
  CategoryPresentation planted;
  planted.vertices = {"v"};
  planted.generators = {{"a", 0, 0, 0, MultiDegree({1})}, {"b", 0, 0, 0, MultiDegree({1})}};
  planted.relations = {{Word::from_generators({0, 1}), Word::vertex(0)}};
  RewriteSystem planted_rs = build_rewriting_system(planted);
  auto report = check_no_inverses(planted, planted_rs, 4);
  CHECK_FALSE(report.passed);
  REQUIRE(report.alpha.has_value());
  CHECK(*report.alpha == Word::generator(0));
  CHECK(*report.beta == Word::generator(1));
}

TEST_CASE("degree functor checks") {
  CHECK(check_degree_functor(threeloop()).additive);
  CHECK(check_degree_functor(threeloop()).non_degenerate);
  CHECK(check_degree_functor(parallel_pairs()).additive);

  CategoryPresentation degenerate = free_loop();
  degenerate.generators[0].degree = MultiDegree({0});
  auto report = check_degree_functor(degenerate);
  CHECK_FALSE(report.non_degenerate);
  CHECK(report.witnesses.size() == 1);
}

TEST_CASE("minimal paths") {
  PresentedCategory three(threeloop());
  three.ensure_verified(6);
  auto mins = minimal_paths(three, 0, 5);
  CHECK(mins.minimal.size() == 3);
  CHECK(mins.exact);

  PresentedCategory loop(free_loop());
  loop.ensure_verified(6);
  CHECK(minimal_paths(loop, 0, 5).minimal.size() == 1);

  PresentedCategory cp(parallel_pairs());
  cp.ensure_verified(6);
  auto at_x3 = minimal_paths(cp, 2, 4);
  CHECK(at_x3.minimal.size() == 2);  // a2 and b2
  CHECK(minimal_paths(cp, 0, 4).minimal.empty());
}

TEST_CASE("property (P) part one reports per-vertex counts") {
  PresentedCategory three(threeloop());
  auto report = property_P_part1(three, 5);
  CHECK(report.finite);
  CHECK(report.exact);
  REQUIRE(report.counts.size() == 1);
  CHECK(report.counts[0] == std::pair<int, int>{0, 3});
}

TEST_CASE("the roots-of-unity combination has a non-nilpotency witness") {
  PresentedCategory three(threeloop());
  three.ensure_verified(8);
  Complex omega = std::polar(1.0, 2.0 * M_PI / 3.0);
  SymbolicElement a{{Word::generator(0), Complex(1, 0)},
                    {Word::generator(1), omega},
                    {Word::generator(2), omega * omega}};
  // L_b * A keeps a nonzero power at every checked depth.
  SymbolicElement b = sym_multiply(three, SymbolicElement{{Word::generator(1), Complex(1, 0)}}, a);
  auto nil = symbolic_nilpotency(three, b, 4);
  CHECK_FALSE(nil.index.has_value());
  for (double norm : nil.power_norms) CHECK(norm > 0.1);

  // A itself squares to zero symbolically.
  auto self = symbolic_nilpotency(three, a, 4);
  REQUIRE(self.index.has_value());
  CHECK(*self.index == 2);
}

TEST_CASE("falsifier finds witnesses on the three-loop category") {
  PresentedCategory three(threeloop());
  auto report = falsify_property_P_part2(three, 6, 2, 17);
  CHECK(report.samples == 6);
  CHECK_FALSE(report.counterexample_found);
  for (const auto& sample : report.results) CHECK(sample.witness.has_value());
}

TEST_CASE("falsifier reports a candidate violation where composition dead-ends") {
  // v1 --f--> v2 with a loop e at v1: combinations supported on f alone are
  // nilpotent against every mu (nothing returns from v2).
  CategoryPresentation pres;
  pres.vertices = {"v1", "v2"};
  pres.generators = {{"f", 0, 1, 0, MultiDegree({1})}};
  pres.has_degree = true;
  pres.rank = 1;
  PresentedCategory cat(std::move(pres));
  cat.ensure_verified(8);
  SymbolicElement lf{{Word::generator(0), Complex(1, 0)}};
  auto levels = cat.classes_by_length(2);
  for (const auto& level : levels)
    for (const Word& mu : level) {
      if (!cat.composable(mu, Word::generator(0))) continue;
      SymbolicElement b = sym_multiply(cat, SymbolicElement{{mu, Complex(1, 0)}}, lf);
      auto nil = symbolic_nilpotency(cat, b, 3);
      REQUIRE(nil.index.has_value());
      CHECK(*nil.index <= 2);
    }
}

TEST_CASE("a k-graph re-encoded as a presentation passes the category axioms") {
  KGraphSkeleton loops;
  loops.rank = 3;
  loops.vertices = {"v"};
  loops.edges = {{"e", 0, 0, 1, MultiDegree::unit(3, 0)},
                 {"f", 0, 0, 2, MultiDegree::unit(3, 1)},
                 {"g", 0, 0, 3, MultiDegree::unit(3, 2)}};
  loops.squares = {{0, 1, 1, 0}, {0, 2, 2, 0}, {1, 2, 2, 1}};

  CategoryPresentation pres = as_presentation(loops);
  CHECK(validate_presentation(pres).empty());
  RewriteSystem rs = build_rewriting_system(pres);
  CHECK(check_confluence(pres, rs, 5).confluent);
  CHECK(check_cancellation(pres, rs, 5).passed);
  CHECK(check_no_inverses(pres, rs, 5).passed);
  CHECK(check_degree_functor(pres).additive);
  CHECK(check_degree_functor(pres).non_degenerate);
}

TEST_CASE("three-loop class counts stay at three per length up to eight") {
  PresentedCategory three(threeloop());
  three.ensure_verified(8);
  auto levels = three.classes_by_length(8);
  CHECK(levels[0].size() == 1);
  for (int len = 1; len <= 8; ++len) CHECK(levels[len].size() == 3);
}
