// graph.cpp -- validation, path enumeration, SCC and cycle predicates.

#include "fock/graph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fock {

std::variant<DirectedGraph, std::vector<Violation>> DirectedGraph::validate(const GraphSpec& spec) {
  std::vector<Violation> violations;

  std::map<std::string, int> vertex_index;
  std::vector<std::string> vertex_names;
  for (const auto& name : spec.vertices) {
    if (vertex_index.count(name)) {
      violations.push_back({ErrorCode::DuplicateId, "duplicate vertex id '" + name + "'"});
      continue;
    }
    vertex_index[name] = static_cast<int>(vertex_names.size());
    vertex_names.push_back(name);
  }

  std::set<std::string> edge_ids;
  std::vector<GraphSpec::Edge> edges = spec.edges;
  std::sort(edges.begin(), edges.end(),
            [](const GraphSpec::Edge& a, const GraphSpec::Edge& b) { return a.id < b.id; });
  for (const auto& e : edges) {
    if (!edge_ids.insert(e.id).second)
      violations.push_back({ErrorCode::DuplicateId, "duplicate edge id '" + e.id + "'"});
    if (vertex_index.count(e.id))
      violations.push_back({ErrorCode::DuplicateId, "edge id '" + e.id + "' clashes with a vertex id"});
    if (!vertex_index.count(e.source))
      violations.push_back({ErrorCode::DanglingEndpoint,
                            "edge '" + e.id + "' has undeclared source '" + e.source + "'"});
    if (!vertex_index.count(e.range))
      violations.push_back({ErrorCode::DanglingEndpoint,
                            "edge '" + e.id + "' has undeclared range '" + e.range + "'"});
  }
  if (!violations.empty()) return violations;

  DirectedGraph g;
  g.vertex_names_ = std::move(vertex_names);
  g.out_edges_.resize(g.vertex_names_.size());
  g.in_edges_.resize(g.vertex_names_.size());
  for (const auto& e : edges) {
    int idx = static_cast<int>(g.edges_.size());
    int src = vertex_index.at(e.source);
    int rng = vertex_index.at(e.range);
    g.edges_.push_back({e.id, src, rng});
    g.out_edges_[src].push_back(idx);
    g.in_edges_[rng].push_back(idx);
  }
  return g;
}

std::optional<int> DirectedGraph::vertex_index(const std::string& name) const {
  for (int v = 0; v < vertex_count(); ++v)
    if (vertex_names_[v] == name) return v;
  return std::nullopt;
}

std::optional<int> DirectedGraph::edge_index(const std::string& id) const {
  for (int e = 0; e < edge_count(); ++e)
    if (edges_[e].id == id) return e;
  return std::nullopt;
}

bool DirectedGraph::valid_path(const Word& w) const {
  if (w.is_vertex()) return w.anchor() >= 0 && w.anchor() < vertex_count();
  for (int32_t g : w.gens())
    if (g < 0 || g >= edge_count()) return false;
  for (int i = 0; i + 1 < w.length(); ++i)
    if (edges_[w.gen(i)].source != edges_[w.gen(i + 1)].range) return false;
  return true;
}

Word concatenate(const DirectedGraph& g, const Word& p, const Word& q) {
  if (g.source_of(p) != g.range_of(q))
    throw Error(ErrorCode::NotComposable,
                "s(p) = " + g.vertex_name(g.source_of(p)) +
                    " differs from r(q) = " + g.vertex_name(g.range_of(q)));
  if (p.is_vertex()) return q;
  if (q.is_vertex()) return p;
  std::vector<int32_t> gens(p.gens().begin(), p.gens().end());
  gens.insert(gens.end(), q.gens().begin(), q.gens().end());
  return Word::from_generators(std::move(gens));
}

std::vector<std::vector<Word>> enumerate_paths(const DirectedGraph& g, int max_len) {
  std::vector<std::vector<Word>> levels;
  std::vector<Word> level0;
  for (int v = 0; v < g.vertex_count(); ++v) level0.push_back(Word::vertex(v));
  levels.push_back(std::move(level0));
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Word> level;
    // Prepending edges in index order to a lex-sorted level keeps lex order.
    for (int e = 0; e < g.edge_count(); ++e) {
      for (const Word& w : levels[len - 1]) {
        if (g.edge(e).source != g.range_of(w)) continue;
        std::vector<int32_t> gens{static_cast<int32_t>(e)};
        gens.insert(gens.end(), w.gens().begin(), w.gens().end());
        level.push_back(Word::from_generators(std::move(gens)));
      }
    }
    levels.push_back(std::move(level));
  }
  return levels;
}

RowFiniteReport is_row_finite(const DirectedGraph& g) {
  RowFiniteReport report;
  report.in_degree.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    report.in_degree[v] = static_cast<int>(g.in_edges(v).size());
  return report;
}

std::vector<int> sources(const DirectedGraph& g) {
  std::vector<int> result;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.in_edges(v).empty()) result.push_back(v);
  return result;
}

namespace {

// Iterative Tarjan.
struct TarjanState {
  const DirectedGraph& g;
  std::vector<int> index, lowlink, component;
  std::vector<bool> on_stack;
  std::vector<int> stack;
  int next_index = 0, next_component = 0;

  explicit TarjanState(const DirectedGraph& graph)
      : g(graph),
        index(graph.vertex_count(), -1),
        lowlink(graph.vertex_count(), 0),
        component(graph.vertex_count(), -1),
        on_stack(graph.vertex_count(), false) {}

  void run(int root) {
    struct Frame {
      int v;
      size_t next_out = 0;
    };
    std::vector<Frame> frames{{root}};
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto& outs = g.out_edges(f.v);
      if (f.next_out < outs.size()) {
        int w = g.edge(outs[f.next_out++]).range;
        if (index[w] < 0) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w});
        } else if (on_stack[w]) {
          lowlink[f.v] = std::min(lowlink[f.v], index[w]);
        }
      } else {
        if (lowlink[f.v] == index[f.v]) {
          while (true) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            component[w] = next_component;
            if (w == f.v) break;
          }
          ++next_component;
        }
        int v = f.v;
        frames.pop_back();
        if (!frames.empty()) lowlink[frames.back().v] = std::min(lowlink[frames.back().v], lowlink[v]);
      }
    }
  }
};

}  // namespace

std::vector<std::vector<int>> strongly_connected_components(const DirectedGraph& g) {
  TarjanState state(g);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (state.index[v] < 0) state.run(v);
  std::vector<std::vector<int>> raw(state.next_component);
  for (int v = 0; v < g.vertex_count(); ++v) raw[state.component[v]].push_back(v);
  std::sort(raw.begin(), raw.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) { return a.front() < b.front(); });
  return raw;
}

CycleCoverReport every_path_lies_on_cycle(const DirectedGraph& g) {
  CycleCoverReport report;
  auto components = strongly_connected_components(g);
  std::vector<int> component_of(g.vertex_count());
  for (int c = 0; c < static_cast<int>(components.size()); ++c)
    for (int v : components[c]) component_of[v] = c;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (component_of[g.edge(e).source] != component_of[g.edge(e).range]) {
      report.holds = false;
      report.witness_edge = e;
      break;
    }
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.in_edges(v).empty() && g.out_edges(v).empty()) report.isolated_vertices.push_back(v);
  return report;
}

CycleEntryReport every_cycle_has_entry(const DirectedGraph& g) {
  CycleEntryReport report;
  // A cycle without an entry consists of vertices of in-degree exactly one,
  // linked by their unique incoming edges.  Walk those links backwards.
  int n = g.vertex_count();
  std::vector<int> state(n, 0);  // 0 unvisited, 1 in progress, 2 done
  for (int start = 0; start < n; ++start) {
    if (state[start] != 0 || g.in_edges(start).size() != 1) continue;
    std::vector<int> chain;
    int v = start;
    while (v >= 0 && state[v] == 0 && g.in_edges(v).size() == 1) {
      state[v] = 1;
      chain.push_back(v);
      v = g.edge(g.in_edges(v)[0]).source;
    }
    if (v >= 0 && state[v] == 1 && g.in_edges(v).size() == 1) {
      // Closed a cycle; report it in forward order.
      auto it = std::find(chain.begin(), chain.end(), v);
      std::vector<int> cycle_edges;
      for (auto walk = it; walk != chain.end(); ++walk)
        cycle_edges.push_back(g.in_edges(*walk)[0]);
      std::reverse(cycle_edges.begin(), cycle_edges.end());
      report.holds = false;
      report.witness_cycle = cycle_edges;
      return report;
    }
    for (int u : chain) state[u] = 2;
  }
  return report;
}

std::vector<int> radiating_vertices(const DirectedGraph& g) {
  // Every in-edge a loop forces, inductively, every incoming path to start at v.
  std::vector<int> result;
  for (int v = 0; v < g.vertex_count(); ++v) {
    bool radiating = true;
    for (int e : g.in_edges(v))
      if (g.edge(e).source != v) {
        radiating = false;
        break;
      }
    if (radiating) result.push_back(v);
  }
  return result;
}

}  // namespace fock
