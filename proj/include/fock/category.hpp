// category.hpp -- common interface for the three path structures.
//
// Directed graphs, higher-rank graph skeletons and finitely presented
// categories all present the same picture to the Fock-space layer: a set of
// vertices, a set of generators with endpoints and a multidegree, and a
// normal-form map deciding equality of composable words.  Graphs are free
// (the normal form is the identity), k-graphs sort colors using their
// factorization squares, presented categories rewrite.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fock/errors.hpp"
#include "fock/graph.hpp"
#include "fock/word.hpp"

namespace fock {

struct Generator {
  std::string id;
  int source = 0;
  int range = 0;
  int color = 0;        // 1-based color for k-graph edges, 0 otherwise
  MultiDegree degree;   // unit vector per color; functor value for categories
};

class PathCategory {
 public:
  enum class Kind { graph, kgraph, category };

  virtual ~PathCategory() = default;

  Kind kind() const { return kind_; }
  int rank() const { return rank_; }
  bool has_degree_functor() const { return has_degree_; }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }
  int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
  const std::vector<Generator>& generators() const { return generators_; }
  int generator_count() const { return static_cast<int>(generators_.size()); }

  int range_of(const Word& w) const {
    return w.is_vertex() ? w.anchor() : generators_[w.leftmost()].range;
  }
  int source_of(const Word& w) const {
    return w.is_vertex() ? w.anchor() : generators_[w.rightmost()].source;
  }
  bool composable(const Word& u, const Word& w) const { return source_of(u) == range_of(w); }
  bool valid_word(const Word& w) const;
  MultiDegree degree_of(const Word& w) const;

  // Raw concatenation uw; throws NotComposable when s(u) != r(w).
  Word concat(const Word& u, const Word& w) const;

  // Canonical representative of the word's equivalence class.  Words must be
  // valid and, for bounded engines, within the verified length bound.
  virtual Word normal_form(Word w) const = 0;

  // Runs the structure's own soundness checks (factorization, confluence)
  // far enough to decide words up to the given total length.  Throws when a
  // check fails.  Graphs are free and verified at any bound.
  virtual void ensure_verified(int length_bound) = 0;
  int verified_bound() const { return verified_bound_; }

  // True when a local certificate decides words at every length: graphs are
  // free; k-graphs with complete squares satisfying the associativity
  // condition factor at all degrees; a rewriting system whose critical pairs
  // all resolved is confluent everywhere (Newman's lemma).
  virtual bool has_exact_certificate() { return false; }

  // Normal forms grouped by length, deterministic order (length, then
  // leftmost-first lex by generator index).  Requires verified_bound.
  std::vector<std::vector<Word>> classes_by_length(int max_len) const;

  // Levels keep appearing forever iff the structure has a "cycle".  Returns
  // the maximal class length when the path space is finite (probing one level
  // past max_probe), nothing otherwise.
  std::optional<int> finite_path_space_length(int max_probe);

 protected:
  PathCategory(Kind kind, int rank, bool has_degree)
      : kind_(kind), rank_(rank), has_degree_(has_degree) {}

  Kind kind_;
  int rank_;
  bool has_degree_;
  std::vector<std::string> vertex_names_;
  std::vector<Generator> generators_;
  int verified_bound_ = 0;
};

// A directed graph viewed as a free category of paths; degree = length.
class GraphCategory final : public PathCategory {
 public:
  explicit GraphCategory(DirectedGraph graph);

  const DirectedGraph& graph() const { return graph_; }

  Word normal_form(Word w) const override { return w; }
  void ensure_verified(int length_bound) override;
  bool has_exact_certificate() override { return true; }

 private:
  DirectedGraph graph_;
};

}  // namespace fock
