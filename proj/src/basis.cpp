// basis.cpp

#include "fock/basis.hpp"

#include "fock/errors.hpp"

namespace fock {

FockBasis::FockBasis(const PathCategory& cat, int truncation)
    : cat_(&cat), truncation_(truncation) {
  if (cat.verified_bound() < truncation)
    throw Error(ErrorCode::UpstreamUnchecked,
                "structure carries no verification certificate to length " +
                    std::to_string(truncation));
  levels_.resize(truncation + 1);
  for (const auto& level : cat.classes_by_length(truncation)) {
    for (const Word& w : level) {
      int idx = static_cast<int>(classes_.size());
      levels_[w.length()].push_back(idx);
      index_[w] = idx;
      range_.push_back(cat.range_of(w));
      source_.push_back(cat.source_of(w));
      classes_.push_back(w);
    }
  }
}

std::vector<int> FockBasis::level_sizes() const {
  std::vector<int> sizes;
  for (const auto& level : levels_) sizes.push_back(static_cast<int>(level.size()));
  return sizes;
}

int FockBasis::index_of(const Word& nf) const {
  auto it = index_.find(nf);
  return it == index_.end() ? -1 : it->second;
}

std::string FockBasis::class_label(int index) const {
  const Word& w = classes_[index];
  if (w.is_vertex()) return cat_->vertex_names()[w.anchor()];
  std::string out;
  for (int i = 0; i < w.length(); ++i) {
    if (i) out += ' ';
    out += cat_->generators()[w.gen(i)].id;
  }
  return out;
}

}  // namespace fock
