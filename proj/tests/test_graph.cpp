// Directed graphs, paths, and predicates, including the brute-force oracles.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "fock/graph.hpp"
#include "fock/rng.hpp"

using namespace fock;

namespace {

GraphSpec toeplitz_spec() {
  GraphSpec spec;
  spec.vertices = {"v1", "v2"};
  spec.edges = {{"e", "v1", "v1"}, {"f", "v1", "v2"}};
  return spec;
}

DirectedGraph toeplitz() { return std::get<DirectedGraph>(DirectedGraph::validate(toeplitz_spec())); }

DirectedGraph cycle_graph(int n) {
  GraphSpec spec;
  for (int i = 1; i <= n; ++i) spec.vertices.push_back("v" + std::to_string(i));
  for (int i = 1; i <= n; ++i)
    spec.edges.push_back({"e" + std::to_string(i), "v" + std::to_string(i),
                          "v" + std::to_string(i % n + 1)});
  return std::get<DirectedGraph>(DirectedGraph::validate(spec));
}

DirectedGraph line_graph(int n) {
  GraphSpec spec;
  for (int i = 1; i <= n; ++i) spec.vertices.push_back("x" + std::to_string(i));
  for (int i = 1; i < n; ++i)
    spec.edges.push_back({"e" + std::to_string(i), "x" + std::to_string(i),
                          "x" + std::to_string(i + 1)});
  return std::get<DirectedGraph>(DirectedGraph::validate(spec));
}

DirectedGraph bouquet(int loops) {
  GraphSpec spec;
  spec.vertices = {"x"};
  for (int i = 0; i < loops; ++i) spec.edges.push_back({"e" + std::to_string(i), "x", "x"});
  return std::get<DirectedGraph>(DirectedGraph::validate(spec));
}

bool reachable(const DirectedGraph& g, int from, int to) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<int> stack{from};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int e : g.out_edges(v)) {
      int w = g.edge(e).range;
      if (w == to) return true;
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return false;
}

// Oracle: every enumerated path up to the bound admits a closing return path.
bool oracle_every_path_on_cycle(const DirectedGraph& g, int bound) {
  auto levels = enumerate_paths(g, bound);
  for (int len = 1; len < static_cast<int>(levels.size()); ++len)
    for (const Word& path : levels[len]) {
      int range = g.range_of(path);
      int source = g.source_of(path);
      if (range == source) continue;
      if (!reachable(g, range, source)) return false;
    }
  return true;
}

// Oracle: enumerate simple cycles and look for one without an entry.
bool oracle_every_cycle_has_entry(const DirectedGraph& g) {
  std::vector<int> cycle_edges;
  std::vector<bool> used_vertex(g.vertex_count(), false);

  auto has_entry = [&g](const std::vector<int>& edges) {
    for (int ce : edges) {
      int v = g.edge(ce).range;
      for (int e : g.in_edges(v))
        if (e != ce) return true;
    }
    return false;
  };

  std::function<bool(int, int)> dfs = [&](int start, int current) -> bool {
    for (int e : g.out_edges(current)) {
      int next = g.edge(e).range;
      if (next == start) {
        cycle_edges.push_back(e);
        bool entryless = !has_entry(cycle_edges);
        cycle_edges.pop_back();
        if (entryless) return true;
      } else if (!used_vertex[next]) {
        used_vertex[next] = true;
        cycle_edges.push_back(e);
        if (dfs(start, next)) return true;
        cycle_edges.pop_back();
        used_vertex[next] = false;
      }
    }
    return false;
  };

  for (int v = 0; v < g.vertex_count(); ++v) {
    std::fill(used_vertex.begin(), used_vertex.end(), false);
    used_vertex[v] = true;
    if (dfs(v, v)) return false;
  }
  return true;
}

DirectedGraph random_graph(uint64_t seed) {
  std::mt19937_64 rng(seed);
  GraphSpec spec;
  int n = uniform_int(rng, 2, 8);
  for (int i = 0; i < n; ++i) spec.vertices.push_back("v" + std::to_string(i));
  int m = uniform_int(rng, 1, std::min(10, 2 * n));
  for (int i = 0; i < m; ++i)
    spec.edges.push_back({"e" + std::to_string(i), spec.vertices[uniform_int(rng, 0, n - 1)],
                          spec.vertices[uniform_int(rng, 0, n - 1)]});
  return std::get<DirectedGraph>(DirectedGraph::validate(spec));
}

}  // namespace

TEST_CASE("validation accepts the loop-plus-exit shape") {
  auto result = DirectedGraph::validate(toeplitz_spec());
  REQUIRE(std::holds_alternative<DirectedGraph>(result));
  const auto& g = std::get<DirectedGraph>(result);
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 2);
  CHECK(g.edge(0).id == "e");
}

TEST_CASE("validation accepts the empty graph") {
  auto result = DirectedGraph::validate(GraphSpec{});
  REQUIRE(std::holds_alternative<DirectedGraph>(result));
  CHECK(std::get<DirectedGraph>(result).vertex_count() == 0);
}

TEST_CASE("validation rejects dangling endpoints and duplicate ids") {
  GraphSpec bad;
  bad.vertices = {"v1"};
  bad.edges = {{"e", "v1", "v2"}};
  auto result = DirectedGraph::validate(bad);
  REQUIRE(std::holds_alternative<std::vector<Violation>>(result));
  CHECK(std::get<std::vector<Violation>>(result).front().code == ErrorCode::DanglingEndpoint);

  GraphSpec dup;
  dup.vertices = {"v", "v"};
  auto result2 = DirectedGraph::validate(dup);
  REQUIRE(std::holds_alternative<std::vector<Violation>>(result2));
  CHECK(std::get<std::vector<Violation>>(result2).front().code == ErrorCode::DuplicateId);
}

TEST_CASE("concatenation composes right to left") {
  DirectedGraph g = toeplitz();
  int e = *g.edge_index("e"), f = *g.edge_index("f");
  Word fe = concatenate(g, Word::generator(f), Word::generator(e));
  CHECK(fe.length() == 2);
  CHECK(g.range_of(fe) == *g.vertex_index("v2"));
  CHECK(g.source_of(fe) == *g.vertex_index("v1"));

  Word q = Word::generator(e);
  CHECK(concatenate(g, Word::vertex(*g.vertex_index("v1")), q) == q);

  // s(e) = v1 but r(f) = v2.
  CHECK_THROWS_AS(concatenate(g, Word::generator(e), Word::generator(f)), Error);
}

TEST_CASE("concatenation is associative with additive lengths") {
  DirectedGraph g = toeplitz();
  auto levels = enumerate_paths(g, 4);
  std::vector<Word> all;
  for (const auto& level : levels) all.insert(all.end(), level.begin(), level.end());
  int triples = 0;
  for (const Word& p : all)
    for (const Word& q : all)
      for (const Word& r : all) {
        if (g.source_of(p) != g.range_of(q) || g.source_of(q) != g.range_of(r)) continue;
        Word left = concatenate(g, concatenate(g, p, q), r);
        Word right = concatenate(g, p, concatenate(g, q, r));
        CHECK(left == right);
        CHECK(left.length() == p.length() + q.length() + r.length());
        ++triples;
      }
  CHECK(triples > 0);
}

TEST_CASE("path enumeration counts") {
  std::vector<size_t> counts;
  for (const auto& level : enumerate_paths(bouquet(1), 5)) counts.push_back(level.size());
  CHECK(counts == std::vector<size_t>{1, 1, 1, 1, 1, 1});

  counts.clear();
  for (const auto& level : enumerate_paths(bouquet(3), 3)) counts.push_back(level.size());
  CHECK(counts == std::vector<size_t>{1, 3, 9, 27});

  DirectedGraph g = toeplitz();
  auto levels = enumerate_paths(g, 2);
  CHECK(levels[0].size() + levels[1].size() + levels[2].size() == 6);
  // Lexicographic within the level: ee before fe.
  CHECK(levels[2][0].gen(0) == *g.edge_index("e"));
  CHECK(levels[2][1].gen(0) == *g.edge_index("f"));
}

TEST_CASE("path counts satisfy the edge recurrence") {
  for (uint64_t seed : {11, 22, 33}) {
    DirectedGraph g = random_graph(seed);
    auto levels = enumerate_paths(g, 5);
    for (int len = 0; len + 1 < static_cast<int>(levels.size()); ++len) {
      size_t expected = 0;
      for (int e = 0; e < g.edge_count(); ++e)
        expected += std::count_if(levels[len].begin(), levels[len].end(), [&](const Word& w) {
          return g.range_of(w) == g.edge(e).source;
        });
      CHECK(levels[len + 1].size() == expected);
    }
  }
}

TEST_CASE("row finiteness and sources") {
  DirectedGraph g = toeplitz();
  auto row = is_row_finite(g);
  CHECK(row.row_finite);
  CHECK(row.in_degree == std::vector<int>{1, 1});
  CHECK(sources(g).empty());

  DirectedGraph line = line_graph(4);
  CHECK(sources(line) == std::vector<int>{0});

  GraphSpec isolated;
  isolated.vertices = {"a", "b"};
  isolated.edges = {{"e", "a", "a"}};
  DirectedGraph gi = std::get<DirectedGraph>(DirectedGraph::validate(isolated));
  CHECK(is_row_finite(gi).in_degree == std::vector<int>{1, 0});
  CHECK(sources(gi) == std::vector<int>{1});
}

TEST_CASE("strongly connected components") {
  auto c4 = strongly_connected_components(cycle_graph(4));
  REQUIRE(c4.size() == 1);
  CHECK(c4[0].size() == 4);

  auto line = strongly_connected_components(line_graph(5));
  CHECK(line.size() == 5);

  auto toep = strongly_connected_components(toeplitz());
  REQUIRE(toep.size() == 2);
  CHECK(toep[0] == std::vector<int>{0});
  CHECK(toep[1] == std::vector<int>{1});
}

TEST_CASE("every path lies on a cycle") {
  CHECK(every_path_lies_on_cycle(cycle_graph(4)).holds);

  DirectedGraph g = toeplitz();
  auto report = every_path_lies_on_cycle(g);
  CHECK_FALSE(report.holds);
  CHECK(g.edge(*report.witness_edge).id == "f");

  GraphSpec edgeless;
  edgeless.vertices = {"a", "b"};
  DirectedGraph ge = std::get<DirectedGraph>(DirectedGraph::validate(edgeless));
  auto vacuous = every_path_lies_on_cycle(ge);
  CHECK(vacuous.holds);
  CHECK(vacuous.isolated_vertices == std::vector<int>{0, 1});
}

TEST_CASE("every cycle has an entry") {
  auto c4 = every_cycle_has_entry(cycle_graph(4));
  CHECK_FALSE(c4.holds);
  CHECK(c4.witness_cycle.size() == 4);

  DirectedGraph g = toeplitz();
  auto toep = every_cycle_has_entry(g);
  CHECK_FALSE(toep.holds);
  REQUIRE(toep.witness_cycle.size() == 1);
  CHECK(g.edge(toep.witness_cycle[0]).id == "e");

  CHECK(every_cycle_has_entry(line_graph(4)).holds);
  // A loop with a second incoming edge has an entry.
  CHECK(every_cycle_has_entry(bouquet(2)).holds);
}

TEST_CASE("radiating vertices") {
  CHECK(radiating_vertices(bouquet(1)) == std::vector<int>{0});
  DirectedGraph g = toeplitz();
  CHECK(radiating_vertices(g) == std::vector<int>{*g.vertex_index("v1")});
  CHECK(radiating_vertices(line_graph(4)) == std::vector<int>{0});
}

TEST_CASE("predicates agree with the brute-force oracles") {
  std::vector<DirectedGraph> graphs{toeplitz(), cycle_graph(4), line_graph(4), bouquet(1),
                                    bouquet(3)};
  for (uint64_t seed = 0; seed < 30; ++seed) graphs.push_back(random_graph(1000 + seed));
  for (const auto& g : graphs) {
    CHECK(every_path_lies_on_cycle(g).holds == oracle_every_path_on_cycle(g, 6));
    CHECK(every_cycle_has_entry(g).holds == oracle_every_cycle_has_entry(g));
  }
}
