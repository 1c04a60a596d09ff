// category.cpp -- shared word helpers and class enumeration.

#include "fock/category.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace fock {

bool PathCategory::valid_word(const Word& w) const {
  if (w.is_vertex()) return w.anchor() >= 0 && w.anchor() < vertex_count();
  for (int32_t g : w.gens())
    if (g < 0 || g >= generator_count()) return false;
  for (int i = 0; i + 1 < w.length(); ++i)
    if (generators_[w.gen(i)].source != generators_[w.gen(i + 1)].range) return false;
  return true;
}

MultiDegree PathCategory::degree_of(const Word& w) const {
  MultiDegree d = MultiDegree::zero(rank_);
  for (int32_t g : w.gens()) d += generators_[g].degree;
  return d;
}

Word PathCategory::concat(const Word& u, const Word& w) const {
  if (!composable(u, w))
    throw Error(ErrorCode::NotComposable,
                "s(u) = " + vertex_names_[source_of(u)] + " differs from r(w) = " +
                    vertex_names_[range_of(w)]);
  if (u.is_vertex()) return w;
  if (w.is_vertex()) return u;
  std::vector<int32_t> gens(u.gens().begin(), u.gens().end());
  gens.insert(gens.end(), w.gens().begin(), w.gens().end());
  return Word::from_generators(std::move(gens));
}

std::vector<std::vector<Word>> PathCategory::classes_by_length(int max_len) const {
  if (verified_bound_ < max_len)
    throw Error(ErrorCode::UpstreamUnchecked,
                "structure verified to length " + std::to_string(verified_bound_) +
                    ", classes requested to " + std::to_string(max_len));
  std::vector<std::vector<Word>> levels(max_len + 1);
  for (int v = 0; v < vertex_count(); ++v) levels[0].push_back(Word::vertex(v));

  // A normal form minus its leftmost generator is again a normal form, so
  // prepending generators to the previous level reaches every class.
  std::set<Word, WordLexLess> seen;
  for (int len = 1; len <= max_len; ++len) {
    std::set<Word, WordLexLess> level;
    for (const Word& w : levels[len - 1]) {
      for (int g = 0; g < generator_count(); ++g) {
        if (generators_[g].source != range_of(w)) continue;
        Word nf = normal_form(concat(Word::generator(g), w));
        if (nf.length() == len) level.insert(nf);
      }
    }
    levels[len].assign(level.begin(), level.end());
  }
  return levels;
}

std::optional<int> PathCategory::finite_path_space_length(int max_probe) {
  ensure_verified(max_probe + 1);
  auto levels = classes_by_length(max_probe + 1);
  for (int len = 0; len <= max_probe + 1; ++len)
    if (levels[len].empty())
      return len - 1;  // higher levels stay empty: nothing to prepend to
  return std::nullopt;
}

GraphCategory::GraphCategory(DirectedGraph graph)
    : PathCategory(Kind::graph, 1, true), graph_(std::move(graph)) {
  vertex_names_ = graph_.vertex_names();
  for (const auto& e : graph_.edges())
    generators_.push_back({e.id, e.source, e.range, 0, MultiDegree({1})});
  verified_bound_ = std::numeric_limits<int>::max();
}

void GraphCategory::ensure_verified(int) {}

}  // namespace fock
