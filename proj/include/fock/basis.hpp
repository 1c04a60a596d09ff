// basis.hpp -- truncated path-indexed orthonormal basis.
#pragma once

#include <unordered_map>
#include <vector>

#include "fock/category.hpp"
#include "fock/word.hpp"

namespace fock {

// One basis vector per equivalence class of words of length at most N,
// grouped into levels by length and ordered (length, lex) within a level.
// Holds a reference to the category; the category must outlive the basis.
class FockBasis {
 public:
  // Throws UpstreamUnchecked when the structure's verified bound is below N.
  FockBasis(const PathCategory& cat, int truncation);

  const PathCategory& category() const { return *cat_; }
  int truncation() const { return truncation_; }
  int dimension() const { return static_cast<int>(classes_.size()); }

  const Word& class_word(int index) const { return classes_[index]; }
  int level_of(int index) const { return classes_[index].length(); }
  int range_vertex(int index) const { return range_[index]; }
  int source_vertex(int index) const { return source_[index]; }

  // Indices of the classes at one level; empty beyond the truncation.
  const std::vector<int>& level(int len) const { return levels_[len]; }
  std::vector<int> level_sizes() const;

  // Index of a normal form, or -1.
  int index_of(const Word& nf) const;
  // Index of the vertex class.
  int vertex_index(int v) const { return index_of(Word::vertex(v)); }

  std::string class_label(int index) const;

 private:
  const PathCategory* cat_;
  int truncation_;
  std::vector<Word> classes_;
  std::vector<int> range_, source_;
  std::vector<std::vector<int>> levels_;
  std::unordered_map<Word, int, WordHash> index_;
};

}  // namespace fock
