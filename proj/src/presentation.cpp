// presentation.cpp -- rewriting, bounded completion, and the category axioms.

#include "fock/presentation.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>
#include <unordered_set>

namespace fock {

namespace {

std::string word_str(const CategoryPresentation& pres, const Word& w) {
  if (w.is_vertex()) return pres.vertices[w.anchor()];
  std::string out;
  for (int i = 0; i < w.length(); ++i) {
    if (i) out += ' ';
    out += pres.generators[w.gen(i)].id;
  }
  return out;
}

int word_range(const CategoryPresentation& pres, const Word& w) {
  return w.is_vertex() ? w.anchor() : pres.generators[w.leftmost()].range;
}
int word_source(const CategoryPresentation& pres, const Word& w) {
  return w.is_vertex() ? w.anchor() : pres.generators[w.rightmost()].source;
}

bool word_valid(const CategoryPresentation& pres, const Word& w) {
  if (w.is_vertex()) return w.anchor() >= 0 && w.anchor() < static_cast<int>(pres.vertices.size());
  for (int32_t g : w.gens())
    if (g < 0 || g >= static_cast<int>(pres.generators.size())) return false;
  for (int i = 0; i + 1 < w.length(); ++i)
    if (pres.generators[w.gen(i)].source != pres.generators[w.gen(i + 1)].range) return false;
  return true;
}

MultiDegree word_degree(const CategoryPresentation& pres, const Word& w) {
  MultiDegree d = MultiDegree::zero(pres.rank);
  for (int32_t g : w.gens()) d += pres.generators[g].degree;
  return d;
}

// All valid composable raw words grouped by length, no normalization.
std::vector<std::vector<Word>> raw_words(const CategoryPresentation& pres, int max_len) {
  std::vector<std::vector<Word>> levels(max_len + 1);
  for (int v = 0; v < static_cast<int>(pres.vertices.size()); ++v)
    levels[0].push_back(Word::vertex(v));
  for (int len = 1; len <= max_len; ++len) {
    for (int32_t g = 0; g < static_cast<int32_t>(pres.generators.size()); ++g) {
      for (const Word& w : levels[len - 1]) {
        if (pres.generators[g].source != word_range(pres, w)) continue;
        std::vector<int32_t> gens{g};
        gens.insert(gens.end(), w.gens().begin(), w.gens().end());
        levels[len].push_back(Word::from_generators(std::move(gens)));
      }
    }
  }
  return levels;
}

// Class representatives (normal forms) grouped by length.
std::vector<std::vector<Word>> classes(const CategoryPresentation& pres, const RewriteSystem& rs,
                                       int max_len) {
  std::vector<std::vector<Word>> levels(max_len + 1);
  for (int v = 0; v < static_cast<int>(pres.vertices.size()); ++v)
    levels[0].push_back(Word::vertex(v));
  // A normal form of length n, minus its leftmost generator, is a normal
  // form of length n-1, so prepending generators reaches every class.
  for (int len = 1; len <= max_len; ++len) {
    std::set<Word, WordLexLess> level;
    for (const Word& w : levels[len - 1]) {
      for (int32_t g = 0; g < static_cast<int32_t>(pres.generators.size()); ++g) {
        if (pres.generators[g].source != word_range(pres, w)) continue;
        std::vector<int32_t> gens{g};
        gens.insert(gens.end(), w.gens().begin(), w.gens().end());
        Word nf = rs.normalize(Word::from_generators(std::move(gens)));
        if (nf.length() == len) level.insert(nf);
      }
    }
    levels[len].assign(level.begin(), level.end());
  }
  return levels;
}

}  // namespace

std::vector<Violation> validate_presentation(const CategoryPresentation& pres) {
  std::vector<Violation> violations;
  std::set<std::string> ids(pres.vertices.begin(), pres.vertices.end());
  if (ids.size() != pres.vertices.size())
    violations.push_back({ErrorCode::DuplicateId, "duplicate vertex id"});
  for (const auto& g : pres.generators) {
    if (!ids.insert(g.id).second)
      violations.push_back({ErrorCode::DuplicateId, "duplicate id '" + g.id + "'"});
    if (g.source < 0 || g.source >= static_cast<int>(pres.vertices.size()) || g.range < 0 ||
        g.range >= static_cast<int>(pres.vertices.size()))
      violations.push_back({ErrorCode::DanglingEndpoint, "generator '" + g.id + "' endpoint undeclared"});
  }
  for (const auto& rel : pres.relations) {
    if (!word_valid(pres, rel.lhs) || !word_valid(pres, rel.rhs)) {
      violations.push_back({ErrorCode::NotComposable,
                            "relation side not composable: " + word_str(pres, rel.lhs) + " = " +
                                word_str(pres, rel.rhs)});
      continue;
    }
    if (word_range(pres, rel.lhs) != word_range(pres, rel.rhs) ||
        word_source(pres, rel.lhs) != word_source(pres, rel.rhs))
      violations.push_back({ErrorCode::NotComposable,
                            "relation sides have different endpoints: " + word_str(pres, rel.lhs) +
                                " = " + word_str(pres, rel.rhs)});
  }
  return violations;
}

CategoryPresentation as_presentation(const KGraphSkeleton& skel) {
  CategoryPresentation pres;
  pres.vertices = skel.vertices;
  pres.generators = skel.edges;
  pres.has_degree = true;
  pres.rank = skel.rank;
  for (const auto& sq : skel.squares)
    pres.relations.push_back({Word::from_generators({sq.f, sq.g}),
                              Word::from_generators({sq.fp, sq.gp})});
  return pres;
}

std::optional<Word> RewriteSystem::step(const Word& w) const {
  for (int pos = 0; pos < w.length(); ++pos) {
    for (const auto& rule : rules_) {
      int len = rule.lhs.length();
      if (pos + len > w.length()) continue;
      bool match = true;
      for (int i = 0; i < len; ++i)
        if (w.gen(pos + i) != rule.lhs.gen(i)) {
          match = false;
          break;
        }
      if (match) return splice(w, pos, len, rule.rhs);
    }
  }
  return std::nullopt;
}

Word RewriteSystem::normalize(Word w) const {
  while (auto next = step(w)) w = std::move(*next);
  return w;
}

std::vector<Word> RewriteSystem::all_steps(const Word& w) const {
  std::vector<Word> out;
  for (int pos = 0; pos < w.length(); ++pos) {
    for (const auto& rule : rules_) {
      int len = rule.lhs.length();
      if (pos + len > w.length()) continue;
      bool match = true;
      for (int i = 0; i < len; ++i)
        if (w.gen(pos + i) != rule.lhs.gen(i)) {
          match = false;
          break;
        }
      if (match) out.push_back(splice(w, pos, len, rule.rhs));
    }
  }
  return out;
}

Word RewriteSystem::splice(const Word& w, int pos, int len, const Word& replacement) const {
  std::vector<int32_t> gens;
  gens.reserve(w.length() - len + replacement.length());
  for (int i = 0; i < pos; ++i) gens.push_back(w.gen(i));
  for (int i = 0; i < replacement.length(); ++i) gens.push_back(replacement.gen(i));
  for (int i = pos + len; i < w.length(); ++i) gens.push_back(w.gen(i));
  if (gens.empty()) return Word::vertex(word_range(*pres_, w));
  return Word::from_generators(std::move(gens));
}

RewriteSystem build_rewriting_system(const CategoryPresentation& pres, int len_bound) {
  std::vector<RewriteRule> rules;
  std::vector<std::string> warnings;

  auto try_add = [&rules, &warnings, &pres](Word a, Word b) {
    if (a == b) {
      warnings.push_back("relation with identical sides dropped: " + word_str(pres, a));
      return false;
    }
    RewriteRule rule = colex_less(a, b) ? RewriteRule{std::move(b), std::move(a)}
                                        : RewriteRule{std::move(a), std::move(b)};
    for (const auto& r : rules)
      if (r.lhs == rule.lhs && r.rhs == rule.rhs) return false;
    rules.push_back(std::move(rule));
    return true;
  };

  for (const auto& rel : pres.relations) try_add(rel.lhs, rel.rhs);

  // Bounded completion: resolve critical pairs whose overlap word fits the
  // bound, then interreduce right-hand sides.  Capped defensively.  When a
  // pass resolves every pair without skipping, the system is terminating and
  // locally confluent, hence confluent at every length.
  const size_t kMaxRules = 512;
  bool changed = true;
  bool skipped_in_last_pass = false;
  while (changed && rules.size() < kMaxRules) {
    changed = false;
    skipped_in_last_pass = false;
    RewriteSystem current(&pres, rules, {});
    std::vector<std::pair<Word, Word>> pending;

    for (size_t i = 0; i < rules.size(); ++i) {
      for (size_t j = 0; j < rules.size(); ++j) {
        const Word& x = rules[i].lhs;
        const Word& y = rules[j].lhs;
        // Proper suffix of x equal to prefix of y.
        for (int k = 1; k < std::min(x.length(), y.length()); ++k) {
          bool match = true;
          for (int t = 0; t < k; ++t)
            if (x.gen(x.length() - k + t) != y.gen(t)) {
              match = false;
              break;
            }
          if (!match) continue;
          if (x.length() + y.length() - k > len_bound) {
            skipped_in_last_pass = true;
            continue;
          }
          std::vector<int32_t> tail(y.gens().begin() + k, y.gens().end());
          std::vector<int32_t> left(rules[i].rhs.gens().begin(), rules[i].rhs.gens().end());
          left.insert(left.end(), tail.begin(), tail.end());
          Word via_i = left.empty() ? Word::vertex(word_range(pres, y)) : Word::from_generators(left);
          // via_i: rhs_i ++ y[k:] needs an anchor when empty; y[k:] nonempty since k < |y|.
          std::vector<int32_t> head(x.gens().begin(), x.gens().end() - k);
          head.insert(head.end(), rules[j].rhs.gens().begin(), rules[j].rhs.gens().end());
          Word via_j = head.empty() ? Word::vertex(word_range(pres, x)) : Word::from_generators(head);
          pending.emplace_back(via_i, via_j);
        }
        // y contained in x (including equal left-hand sides of distinct rules).
        if (i != j && y.length() <= x.length()) {
          for (int pos = 0; pos + y.length() <= x.length(); ++pos) {
            bool match = true;
            for (int t = 0; t < y.length(); ++t)
              if (x.gen(pos + t) != y.gen(t)) {
                match = false;
                break;
              }
            if (!match) continue;
            std::vector<int32_t> patched;
            for (int t = 0; t < pos; ++t) patched.push_back(x.gen(t));
            for (int t = 0; t < rules[j].rhs.length(); ++t) patched.push_back(rules[j].rhs.gen(t));
            for (int t = pos + y.length(); t < x.length(); ++t) patched.push_back(x.gen(t));
            Word via_j = patched.empty() ? Word::vertex(word_range(pres, x))
                                         : Word::from_generators(std::move(patched));
            pending.emplace_back(rules[i].rhs, via_j);
          }
        }
      }
    }

    for (auto& [a, b] : pending) {
      Word na = current.normalize(a);
      Word nb = current.normalize(b);
      if (na == nb) continue;
      if (try_add(std::move(na), std::move(nb))) changed = true;
      if (rules.size() >= kMaxRules) {
        warnings.push_back("completion rule cap reached");
        break;
      }
    }

    // Interreduce: normalize right-hand sides against the full rule set.
    RewriteSystem after(&pres, rules, {});
    std::vector<RewriteRule> reduced;
    for (const auto& r : rules) {
      Word rhs = after.normalize(r.rhs);
      if (rhs != r.rhs) changed = true;
      bool dup = false;
      for (const auto& kept : reduced)
        if (kept.lhs == r.lhs && kept.rhs == rhs) dup = true;
      if (!dup) reduced.push_back({r.lhs, rhs});
    }
    rules = std::move(reduced);

    // Drop rules whose sides already join without them.
    for (size_t r = 0; r < rules.size();) {
      std::vector<RewriteRule> others;
      for (size_t i = 0; i < rules.size(); ++i)
        if (i != r) others.push_back(rules[i]);
      RewriteSystem rest(&pres, others, {});
      if (rest.normalize(rules[r].lhs) == rest.normalize(rules[r].rhs)) {
        rules.erase(rules.begin() + r);
        changed = true;
      } else {
        ++r;
      }
    }
  }

  std::sort(rules.begin(), rules.end(), [](const RewriteRule& a, const RewriteRule& b) {
    return colex_less(a.lhs, b.lhs) || (a.lhs == b.lhs && colex_less(a.rhs, b.rhs));
  });
  bool complete = !changed && !skipped_in_last_pass && rules.size() < kMaxRules;
  return RewriteSystem(&pres, std::move(rules), std::move(warnings), complete);
}

ConfluenceReport check_confluence(const CategoryPresentation& pres, const RewriteSystem& rs,
                                  int len_bound) {
  ConfluenceReport report;
  report.bound = len_bound;
  std::unordered_set<Word, WordHash> settled;
  for (const auto& level : raw_words(pres, len_bound)) {
    for (const Word& w : level) {
      ++report.words_checked;
      if (settled.count(w)) continue;
      // BFS the rewrite cone; every member inherits the unique normal form.
      std::vector<Word> cone;
      std::unordered_set<Word, WordHash> seen{w};
      std::deque<Word> queue{w};
      std::set<Word, WordLexLess> irreducible;
      while (!queue.empty()) {
        Word cur = queue.front();
        queue.pop_front();
        cone.push_back(cur);
        auto nexts = rs.all_steps(cur);
        if (nexts.empty()) irreducible.insert(cur);
        for (Word& n : nexts)
          if (seen.insert(n).second) queue.push_back(std::move(n));
      }
      if (irreducible.size() != 1) {
        report.confluent = false;
        report.witness = w;
        report.witness_normal_forms.assign(irreducible.begin(), irreducible.end());
        return report;
      }
      for (Word& c : cone) settled.insert(std::move(c));
    }
  }
  return report;
}

CancellationReport check_cancellation(const CategoryPresentation& pres, const RewriteSystem& rs,
                                      int len_bound) {
  CancellationReport report;
  report.bound = len_bound;
  auto levels = classes(pres, rs, len_bound);
  std::vector<Word> all;
  for (const auto& level : levels) all.insert(all.end(), level.begin(), level.end());

  for (const Word& alpha : all) {
    if (alpha.is_vertex()) continue;
    for (const Word& beta : all) {
      for (const Word& gamma : all) {
        if (!lex_less(beta, gamma)) continue;  // unordered pair once
        // Left: alpha(beta) ~ alpha(gamma) forces beta ~ gamma.
        if (word_source(pres, alpha) == word_range(pres, beta) &&
            word_source(pres, alpha) == word_range(pres, gamma) &&
            alpha.length() + std::max(beta.length(), gamma.length()) <= len_bound) {
          std::vector<int32_t> ab(alpha.gens().begin(), alpha.gens().end());
          ab.insert(ab.end(), beta.gens().begin(), beta.gens().end());
          std::vector<int32_t> ag(alpha.gens().begin(), alpha.gens().end());
          ag.insert(ag.end(), gamma.gens().begin(), gamma.gens().end());
          if (rs.normalize(Word::from_generators(ab)) == rs.normalize(Word::from_generators(ag))) {
            report.passed = false;
            report.side = "left";
            report.alpha = alpha;
            report.beta = beta;
            report.gamma = gamma;
            return report;
          }
        }
        // Right: (beta)alpha ~ (gamma)alpha forces beta ~ gamma.
        if (word_range(pres, alpha) == word_source(pres, beta) &&
            word_range(pres, alpha) == word_source(pres, gamma) &&
            alpha.length() + std::max(beta.length(), gamma.length()) <= len_bound) {
          std::vector<int32_t> ba(beta.gens().begin(), beta.gens().end());
          ba.insert(ba.end(), alpha.gens().begin(), alpha.gens().end());
          std::vector<int32_t> ga(gamma.gens().begin(), gamma.gens().end());
          ga.insert(ga.end(), alpha.gens().begin(), alpha.gens().end());
          if (rs.normalize(Word::from_generators(ba)) == rs.normalize(Word::from_generators(ga))) {
            report.passed = false;
            report.side = "right";
            report.alpha = alpha;
            report.beta = beta;
            report.gamma = gamma;
            return report;
          }
        }
      }
    }
  }
  return report;
}

NoInversesReport check_no_inverses(const CategoryPresentation& pres, const RewriteSystem& rs,
                                   int len_bound) {
  NoInversesReport report;
  report.bound = len_bound;
  auto levels = classes(pres, rs, len_bound);
  std::vector<Word> nonvertex;
  for (size_t len = 1; len < levels.size(); ++len)
    nonvertex.insert(nonvertex.end(), levels[len].begin(), levels[len].end());
  for (const Word& alpha : nonvertex) {
    for (const Word& beta : nonvertex) {
      if (word_source(pres, alpha) != word_range(pres, beta)) continue;
      if (alpha.length() + beta.length() > len_bound) continue;
      std::vector<int32_t> ab(alpha.gens().begin(), alpha.gens().end());
      ab.insert(ab.end(), beta.gens().begin(), beta.gens().end());
      if (rs.normalize(Word::from_generators(ab)).is_vertex()) {
        report.passed = false;
        report.alpha = alpha;
        report.beta = beta;
        return report;
      }
    }
  }
  return report;
}

DegreeFunctorReport check_degree_functor(const CategoryPresentation& pres) {
  DegreeFunctorReport report;
  report.present = pres.has_degree;
  if (!pres.has_degree) return report;
  for (const auto& rel : pres.relations) {
    if (!(word_degree(pres, rel.lhs) == word_degree(pres, rel.rhs))) {
      report.additive = false;
      report.witnesses.push_back("degrees differ across relation " + word_str(pres, rel.lhs) +
                                 " = " + word_str(pres, rel.rhs));
    }
  }
  for (const auto& g : pres.generators) {
    if (g.degree.total() == 0) {
      report.non_degenerate = false;
      report.witnesses.push_back("generator '" + g.id + "' has degree zero");
    }
  }
  return report;
}

PresentedCategory::PresentedCategory(CategoryPresentation pres, int completion_bound)
    : PathCategory(Kind::category, pres.rank, pres.has_degree), pres_(std::move(pres)) {
  vertex_names_ = pres_.vertices;
  generators_ = pres_.generators;
  int bound = completion_bound;
  for (const auto& rel : pres_.relations)
    bound = std::max(bound, 2 * std::max(rel.lhs.length(), rel.rhs.length()));
  rs_ = build_rewriting_system(pres_, bound);
}

void PresentedCategory::ensure_verified(int length_bound) {
  if (verified_bound_ >= length_bound) return;
  if (rs_.complete()) {
    verified_bound_ = std::numeric_limits<int>::max();
    return;
  }
  ConfluenceReport report = check_confluence(pres_, rs_, length_bound);
  if (!report.confluent)
    throw Error(ErrorCode::UpstreamUnchecked,
                "rewriting not confluent at bound " + std::to_string(length_bound) +
                    (report.witness ? " (witness " + word_str(pres_, *report.witness) + ")" : ""));
  verified_bound_ = length_bound;
}

MinimalPathsReport minimal_paths(const PathCategory& cat, int vertex, int len_bound) {
  MinimalPathsReport report;
  report.bound = len_bound;
  auto levels = cat.classes_by_length(len_bound);

  // With a non-degenerate degree functor a factor of a generator has total
  // degree strictly below max_g |deg(g)|, so word lengths up to that value
  // exhaust the search.
  int max_gen_degree = 0;
  bool non_degenerate = cat.has_degree_functor();
  for (const auto& g : cat.generators()) {
    max_gen_degree = std::max(max_gen_degree, g.degree.total());
    if (g.degree.total() == 0) non_degenerate = false;
  }
  report.exact = non_degenerate && len_bound >= max_gen_degree;

  std::vector<Word> nonvertex;
  for (size_t len = 1; len < levels.size(); ++len)
    nonvertex.insert(nonvertex.end(), levels[len].begin(), levels[len].end());

  for (const Word& mu : levels[1]) {
    if (cat.range_of(mu) != vertex) continue;
    bool factors = false;
    for (const Word& nu : nonvertex) {
      if (factors) break;
      for (const Word& eta : nonvertex) {
        if (nu.length() + eta.length() > len_bound) continue;
        if (!cat.composable(nu, eta)) continue;
        if (cat.normal_form(cat.concat(nu, eta)) == mu) {
          factors = true;
          break;
        }
      }
    }
    if (!factors) report.minimal.push_back(mu);
  }
  return report;
}

PropertyP1Report property_P_part1(PathCategory& cat, int len_bound) {
  PropertyP1Report report;
  report.bound = len_bound;
  cat.ensure_verified(len_bound);
  report.exact = true;
  for (int v = 0; v < cat.vertex_count(); ++v) {
    auto mins = minimal_paths(cat, v, len_bound);
    report.exact = report.exact && mins.exact;
    report.counts.emplace_back(v, static_cast<int>(mins.minimal.size()));
  }
  return report;
}

}  // namespace fock
