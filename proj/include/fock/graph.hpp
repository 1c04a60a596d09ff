// graph.hpp -- directed graphs, paths, and the graph-theoretic predicates.
#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fock/errors.hpp"
#include "fock/word.hpp"

namespace fock {

// Raw, unvalidated description of a directed graph.
struct GraphSpec {
  struct Edge {
    std::string id;
    std::string source;
    std::string range;
  };
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
};

struct Violation {
  ErrorCode code;
  std::string message;
};

// A validated directed graph.  Vertices and edges are indexed densely;
// edges are stored sorted by id so that generator-index order coincides
// with lexicographic order on edge ids.
class DirectedGraph {
 public:
  struct Edge {
    std::string id;
    int source;
    int range;
  };

  static std::variant<DirectedGraph, std::vector<Violation>> validate(const GraphSpec& spec);

  int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::string& vertex_name(int v) const { return vertex_names_[v]; }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }
  const Edge& edge(int e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::optional<int> vertex_index(const std::string& name) const;
  std::optional<int> edge_index(const std::string& id) const;

  const std::vector<int>& out_edges(int v) const { return out_edges_[v]; }
  const std::vector<int>& in_edges(int v) const { return in_edges_[v]; }

  // Endpoints of a path word (vertices are length-0 paths with r(v)=v=s(v)).
  int range_of(const Word& w) const { return w.is_vertex() ? w.anchor() : edges_[w.leftmost()].range; }
  int source_of(const Word& w) const { return w.is_vertex() ? w.anchor() : edges_[w.rightmost()].source; }

  // Adjacent edges composable: s(w_i) = r(w_{i+1}).
  bool valid_path(const Word& w) const;

 private:
  std::vector<std::string> vertex_names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> out_edges_;
  std::vector<std::vector<int>> in_edges_;
};

// pq with r(pq) = r(p), s(pq) = s(q); throws NotComposable when s(p) != r(q).
Word concatenate(const DirectedGraph& g, const Word& p, const Word& q);

// All paths of length <= max_len, grouped by length; within a level ordered
// lexicographically by edge-id word.
std::vector<std::vector<Word>> enumerate_paths(const DirectedGraph& g, int max_len);

struct RowFiniteReport {
  bool row_finite = true;  // always true for finite descriptions
  std::vector<int> in_degree;
};
RowFiniteReport is_row_finite(const DirectedGraph& g);

// Vertices receiving no edges.
std::vector<int> sources(const DirectedGraph& g);

// SCC partition; components ordered by smallest member vertex.
std::vector<std::vector<int>> strongly_connected_components(const DirectedGraph& g);

struct CycleCoverReport {
  bool holds = true;
  std::optional<int> witness_edge;      // an edge whose endpoints split across SCCs
  std::vector<int> isolated_vertices;   // vertices with no incident edges (flagged, not counted)
};
// True iff every edge has both endpoints in the same SCC; equivalently every
// path in the path space lies on a cycle.
CycleCoverReport every_path_lies_on_cycle(const DirectedGraph& g);

struct CycleEntryReport {
  bool holds = true;
  std::vector<int> witness_cycle;  // edge indices of an entryless cycle
};
// True iff no cycle consists solely of vertices of in-degree exactly one.
CycleEntryReport every_cycle_has_entry(const DirectedGraph& g);

// Vertices v such that every path with range v has source v.
std::vector<int> radiating_vertices(const DirectedGraph& g);

}  // namespace fock
