// kgraph.hpp -- higher-rank graph skeletons with factorization squares.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fock/category.hpp"
#include "fock/word.hpp"

namespace fock {

// Colored 1-skeleton plus the square identifications f∘g = g'∘f' between
// bichromatic composable pairs.  The squares determine the k-graph up to the
// degree bound they are verified at.
struct KGraphSkeleton {
  int rank = 2;
  std::vector<std::string> vertices;
  std::vector<Generator> edges;  // color in 1..rank, degree = unit vector

  struct Square {
    // Sides as length-2 generator words: [f, g] and [fp, gp].
    int32_t f, g, fp, gp;
  };
  std::vector<Square> squares;
};

struct FactorizationIssue {
  enum class Type { BadSquare, MissingSquare, AmbiguousSquare, MissingFactorization, AmbiguousFactorization };
  Type type;
  std::string message;
};

struct FactorizationReport {
  bool passed = true;
  MultiDegree componentwise_bound;
  int total_degree_cap = 0;
  int words_checked = 0;
  std::vector<FactorizationIssue> issues;
};

// Verifies, for every path word with multidegree dominated by `bound` (and
// total degree at most `total_cap` when positive), that each split m + n of
// its degree yields exactly one factorization under the squares.
FactorizationReport check_factorization(const KGraphSkeleton& skel, const MultiDegree& bound,
                                        int total_cap = 0);

class KGraphCategory final : public PathCategory {
 public:
  explicit KGraphCategory(KGraphSkeleton skel);

  const KGraphSkeleton& skeleton() const { return skel_; }

  // Unique representative with colors non-decreasing read right to left
  // (smallest color nearest the source), obtained by applying squares.
  Word normal_form(Word w) const override;

  // Local certificate first; exhaustive check_factorization up to total
  // degree `length_bound` when the certificate fails.
  void ensure_verified(int length_bound) override;

  // Complete unique squares plus, for rank >= 3, the associativity condition
  // on tricolored triples.  Together they give factorization at all degrees.
  bool has_exact_certificate() override;

  // Classes grouped by multidegree, counts per degree.
  std::map<MultiDegree, std::vector<Word>> classes_by_degree(int max_total_degree) const;

  std::optional<FactorizationReport> last_report() const { return last_report_; }

 private:
  // The unique square side starting with this ordered edge pair, if any.
  std::optional<std::pair<int32_t, int32_t>> square_partner(int32_t a, int32_t b) const;

  KGraphSkeleton skel_;
  std::map<std::pair<int32_t, int32_t>, std::vector<std::pair<int32_t, int32_t>>> square_index_;
  std::optional<FactorizationReport> last_report_;
  std::optional<bool> local_certificate_;
};

}  // namespace fock
