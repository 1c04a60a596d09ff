// word.hpp -- words over generators, and multidegrees in N^k.
//
// A word w = w1 w2 ... wn lists generator indices with the LEFTMOST symbol
// applied last: w denotes the composition w1 ∘ w2 ∘ ... ∘ wn, so the range
// of the word sits at the left end and the source at the right end.  A word
// of length zero is an identity morphism and carries its vertex as anchor.
#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <vector>

namespace fock {

class MultiDegree {
 public:
  MultiDegree() = default;
  explicit MultiDegree(std::vector<int> parts) : parts_(std::move(parts)) {}
  static MultiDegree zero(int rank) { return MultiDegree(std::vector<int>(rank, 0)); }
  static MultiDegree unit(int rank, int index) {
    std::vector<int> p(rank, 0);
    p[index] = 1;
    return MultiDegree(std::move(p));
  }

  int rank() const { return static_cast<int>(parts_.size()); }
  int operator[](int i) const { return parts_[i]; }
  const std::vector<int>& parts() const { return parts_; }

  int total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  MultiDegree& operator+=(const MultiDegree& other) {
    for (int i = 0; i < rank(); ++i) parts_[i] += other.parts_[i];
    return *this;
  }
  friend MultiDegree operator+(MultiDegree a, const MultiDegree& b) { return a += b; }

  // Componentwise order; used by factorization bounds.
  bool dominated_by(const MultiDegree& bound) const {
    for (int i = 0; i < rank(); ++i)
      if (parts_[i] > bound.parts_[i]) return false;
    return true;
  }

  bool operator==(const MultiDegree&) const = default;
  bool operator<(const MultiDegree& other) const { return parts_ < other.parts_; }

 private:
  std::vector<int> parts_;
};

class Word {
 public:
  Word() = default;

  static Word vertex(int v) {
    Word w;
    w.anchor_ = v;
    return w;
  }
  static Word from_generators(std::vector<int32_t> gens) {
    Word w;
    w.gens_ = std::move(gens);
    return w;
  }
  static Word generator(int32_t g) { return from_generators({g}); }

  bool is_vertex() const { return gens_.empty(); }
  int anchor() const { return anchor_; }
  int length() const { return static_cast<int>(gens_.size()); }
  std::span<const int32_t> gens() const { return gens_; }
  int32_t gen(int i) const { return gens_[i]; }
  int32_t leftmost() const { return gens_.front(); }
  int32_t rightmost() const { return gens_.back(); }

  // Factor [from, from+len) as a standalone word; only valid for len >= 1.
  Word factor(int from, int len) const {
    return from_generators(std::vector<int32_t>(gens_.begin() + from, gens_.begin() + from + len));
  }

  bool operator==(const Word&) const = default;
  // Arbitrary total order for container keys; domain orders are lex_less
  // and colex_less below.
  auto operator<=>(const Word&) const = default;

 private:
  std::vector<int32_t> gens_;
  int32_t anchor_ = -1;  // vertex id when gens_ is empty
};

// Length, then leftmost-first comparison by generator index.  Basis order.
inline bool lex_less(const Word& a, const Word& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.is_vertex()) return a.anchor() < b.anchor();
  for (int i = 0; i < a.length(); ++i)
    if (a.gen(i) != b.gen(i)) return a.gen(i) < b.gen(i);
  return false;
}

// Length, then rightmost-first (source end first) comparison.  Rewrite order.
inline bool colex_less(const Word& a, const Word& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.is_vertex()) return a.anchor() < b.anchor();
  for (int i = a.length() - 1; i >= 0; --i)
    if (a.gen(i) != b.gen(i)) return a.gen(i) < b.gen(i);
  return false;
}

struct WordLexLess {
  bool operator()(const Word& a, const Word& b) const { return lex_less(a, b); }
};

struct WordHash {
  size_t operator()(const Word& w) const {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&h](uint64_t x) {
      h ^= x;
      h *= 1099511628211ull;
    };
    mix(static_cast<uint64_t>(w.length()));
    if (w.is_vertex()) {
      mix(static_cast<uint64_t>(w.anchor()) + 0x9e3779b9u);
    } else {
      for (int32_t g : w.gens()) mix(static_cast<uint64_t>(g) + 1);
    }
    return static_cast<size_t>(h);
  }
};

}  // namespace fock
