// presentation.hpp -- finitely presented categories of paths and the
// bounded rewriting engine deciding word equality up to a length bound.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fock/category.hpp"
#include "fock/kgraph.hpp"
#include "fock/word.hpp"

namespace fock {

struct CategoryPresentation {
  std::vector<std::string> vertices;
  std::vector<Generator> generators;  // degree carries the functor value when present
  struct Relation {
    Word lhs, rhs;
  };
  std::vector<Relation> relations;
  bool has_degree = false;
  int rank = 1;
};

std::vector<Violation> validate_presentation(const CategoryPresentation& pres);

// A k-graph skeleton re-encoded as a presentation: squares become relations,
// colors become the degree functor.
CategoryPresentation as_presentation(const KGraphSkeleton& skel);

struct RewriteRule {
  Word lhs, rhs;  // rhs strictly below lhs in (length, source-end lex) order
};

class RewriteSystem {
 public:
  RewriteSystem() = default;
  RewriteSystem(const CategoryPresentation* pres, std::vector<RewriteRule> rules,
                std::vector<std::string> warnings, bool complete = false)
      : pres_(pres), rules_(std::move(rules)), warnings_(std::move(warnings)),
        complete_(complete) {}

  const std::vector<RewriteRule>& rules() const { return rules_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  // All critical pairs resolved with nothing skipped: the system terminates
  // and is locally confluent, hence confluent at every length.
  bool complete() const { return complete_; }

  // One rewrite step at the leftmost matching position (first rule wins);
  // nullopt when the word is irreducible.
  std::optional<Word> step(const Word& w) const;

  // Exhaustive leftmost rewriting; deterministic and idempotent.
  Word normalize(Word w) const;

  // All one-step rewrites, at every position with every rule.
  std::vector<Word> all_steps(const Word& w) const;

 private:
  Word splice(const Word& w, int pos, int len, const Word& replacement) const;

  const CategoryPresentation* pres_ = nullptr;
  std::vector<RewriteRule> rules_;
  std::vector<std::string> warnings_;
  bool complete_ = false;
};

// Orients every relation larger -> smaller under (length, source-end lex),
// then closes under critical pairs with overlap words up to len_bound.
// Identical-sided relations are dropped with a warning.
RewriteSystem build_rewriting_system(const CategoryPresentation& pres, int len_bound = 8);

struct ConfluenceReport {
  bool confluent = true;
  int bound = 0;
  int words_checked = 0;
  std::optional<Word> witness;
  std::vector<Word> witness_normal_forms;
};
// BFS oracle: every rewrite order from every raw word up to len_bound must
// reach one and the same irreducible word.
ConfluenceReport check_confluence(const CategoryPresentation& pres, const RewriteSystem& rs,
                                  int len_bound);

struct CancellationReport {
  bool passed = true;
  int bound = 0;
  std::string side;  // "left" or "right" on failure
  std::optional<Word> alpha, beta, gamma;
};
CancellationReport check_cancellation(const CategoryPresentation& pres, const RewriteSystem& rs,
                                      int len_bound);

struct NoInversesReport {
  bool passed = true;
  int bound = 0;
  std::optional<Word> alpha, beta;
};
NoInversesReport check_no_inverses(const CategoryPresentation& pres, const RewriteSystem& rs,
                                   int len_bound);

struct DegreeFunctorReport {
  bool present = false;
  bool additive = true;      // phi(lhs) == phi(rhs) for every relation
  bool non_degenerate = true;
  std::vector<std::string> witnesses;
};
DegreeFunctorReport check_degree_functor(const CategoryPresentation& pres);

class PresentedCategory final : public PathCategory {
 public:
  explicit PresentedCategory(CategoryPresentation pres, int completion_bound = 8);

  const CategoryPresentation& presentation() const { return pres_; }
  const RewriteSystem& rewrite_system() const { return rs_; }

  Word normal_form(Word w) const override { return rs_.normalize(std::move(w)); }
  void ensure_verified(int length_bound) override;
  bool has_exact_certificate() override { return rs_.complete(); }

 private:
  CategoryPresentation pres_;
  RewriteSystem rs_;
};

struct MinimalPathsReport {
  std::vector<Word> minimal;  // class representatives with range v
  bool exact = false;         // search provably exhaustive
  int bound = 0;
};
// Non-vertex classes mu with r(mu) = v admitting no factorization into two
// non-vertex classes.  Classes whose normal form has length >= 2 split along
// their own word, so candidates are the length-one classes.
MinimalPathsReport minimal_paths(const PathCategory& cat, int vertex, int len_bound);

struct PropertyP1Report {
  bool finite = true;
  bool exact = false;
  int bound = 0;
  std::vector<std::pair<int, int>> counts;  // vertex -> minimal path count
};
PropertyP1Report property_P_part1(PathCategory& cat, int len_bound);

}  // namespace fock
