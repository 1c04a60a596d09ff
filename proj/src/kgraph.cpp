// kgraph.cpp -- factorization checking and color-sorted normal forms.

#include "fock/kgraph.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <limits>
#include <set>
#include <unordered_map>

namespace fock {

namespace {

std::string word_ids(const KGraphSkeleton& skel, const Word& w) {
  if (w.is_vertex()) return skel.vertices[w.anchor()];
  std::string out;
  for (int i = 0; i < w.length(); ++i) {
    if (i) out += ' ';
    out += skel.edges[w.gen(i)].id;
  }
  return out;
}

bool side_composable(const KGraphSkeleton& skel, int32_t a, int32_t b) {
  return skel.edges[a].source == skel.edges[b].range;
}

// All words reachable from w by square applications, with a memoized
// colex-minimal representative per word.
class SquareClosure {
 public:
  SquareClosure(const KGraphSkeleton& skel,
                const std::map<std::pair<int32_t, int32_t>, std::vector<std::pair<int32_t, int32_t>>>& index)
      : skel_(skel), index_(index) {}

  const std::vector<Word>& members(const Word& w) {
    auto it = class_of_.find(w);
    if (it != class_of_.end()) return classes_[it->second];

    std::vector<Word> closure;
    std::set<Word, WordLexLess> seen;
    std::deque<Word> queue{w};
    seen.insert(w);
    while (!queue.empty()) {
      Word cur = queue.front();
      queue.pop_front();
      closure.push_back(cur);
      for (int i = 0; i + 1 < cur.length(); ++i) {
        auto key = std::make_pair(cur.gen(i), cur.gen(i + 1));
        auto hit = index_.find(key);
        if (hit == index_.end()) continue;
        for (const auto& [p, q] : hit->second) {
          std::vector<int32_t> gens(cur.gens().begin(), cur.gens().end());
          gens[i] = p;
          gens[i + 1] = q;
          Word next = Word::from_generators(std::move(gens));
          if (seen.insert(next).second) queue.push_back(next);
        }
      }
    }
    int id = static_cast<int>(classes_.size());
    for (const Word& m : closure) class_of_[m] = id;
    std::sort(closure.begin(), closure.end(), [](const Word& a, const Word& b) { return colex_less(a, b); });
    classes_.push_back(std::move(closure));
    return classes_.back();
  }

  const Word& representative(const Word& w) {
    if (w.is_vertex()) {
      auto it = class_of_.find(w);
      if (it == class_of_.end()) {
        int id = static_cast<int>(classes_.size());
        class_of_[w] = id;
        classes_.push_back({w});
        return classes_.back().front();
      }
      return classes_[it->second].front();
    }
    return members(w).front();
  }

 private:
  const KGraphSkeleton& skel_;
  const std::map<std::pair<int32_t, int32_t>, std::vector<std::pair<int32_t, int32_t>>>& index_;
  std::unordered_map<Word, int, WordHash> class_of_;
  std::vector<std::vector<Word>> classes_;
};

std::map<std::pair<int32_t, int32_t>, std::vector<std::pair<int32_t, int32_t>>> build_square_index(
    const KGraphSkeleton& skel) {
  std::map<std::pair<int32_t, int32_t>, std::vector<std::pair<int32_t, int32_t>>> index;
  for (const auto& sq : skel.squares) {
    index[{sq.f, sq.g}].push_back({sq.fp, sq.gp});
    index[{sq.fp, sq.gp}].push_back({sq.f, sq.g});
  }
  return index;
}

// Every degree m with m <= d componentwise, in deterministic order.
std::vector<MultiDegree> sub_degrees(const MultiDegree& d) {
  std::vector<MultiDegree> out{MultiDegree::zero(d.rank())};
  for (int c = 0; c < d.rank(); ++c) {
    std::vector<MultiDegree> next;
    for (const auto& m : out)
      for (int v = 0; v <= d[c]; ++v) {
        auto parts = m.parts();
        parts[c] = v;
        next.push_back(MultiDegree(parts));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

FactorizationReport check_factorization(const KGraphSkeleton& skel, const MultiDegree& bound,
                                        int total_cap) {
  FactorizationReport report;
  report.componentwise_bound = bound;
  report.total_degree_cap = total_cap;
  auto fail = [&report](FactorizationIssue::Type type, std::string message) {
    report.passed = false;
    report.issues.push_back({type, std::move(message)});
  };

  // Square sanity: both sides composable bichromatic pairs with matching
  // endpoints, matching multidegree, and opposite color orders.
  for (const auto& sq : skel.squares) {
    const auto& f = skel.edges[sq.f];
    const auto& g = skel.edges[sq.g];
    const auto& fp = skel.edges[sq.fp];
    const auto& gp = skel.edges[sq.gp];
    std::string label = f.id + " " + g.id + " = " + fp.id + " " + gp.id;
    if (!side_composable(skel, sq.f, sq.g) || !side_composable(skel, sq.fp, sq.gp)) {
      fail(FactorizationIssue::Type::BadSquare, "square side not composable: " + label);
      continue;
    }
    if (f.range != fp.range || g.source != gp.source) {
      fail(FactorizationIssue::Type::BadSquare, "square sides have different endpoints: " + label);
      continue;
    }
    if (f.color == g.color || fp.color != g.color || gp.color != f.color)
      fail(FactorizationIssue::Type::BadSquare,
           "square sides must be bichromatic with opposite color orders: " + label);
  }
  if (!report.passed) return report;

  auto index = build_square_index(skel);

  // Exactly one square through each composable bichromatic pair, per side.
  for (int32_t a = 0; a < static_cast<int32_t>(skel.edges.size()); ++a) {
    for (int32_t b = 0; b < static_cast<int32_t>(skel.edges.size()); ++b) {
      if (skel.edges[a].color == skel.edges[b].color) continue;
      if (!side_composable(skel, a, b)) continue;
      auto it = index.find({a, b});
      size_t count = it == index.end() ? 0 : it->second.size();
      std::string label = skel.edges[a].id + " " + skel.edges[b].id;
      if (count == 0)
        fail(FactorizationIssue::Type::MissingSquare, "no square contains the pair " + label);
      else if (count > 1)
        fail(FactorizationIssue::Type::AmbiguousSquare,
             "pair " + label + " appears in " + std::to_string(count) + " squares");
    }
  }
  if (!report.passed) return report;

  // Unique-factorization sweep: for every class of words within the bound and
  // every split of its degree there must be exactly one (prefix, suffix) pair.
  SquareClosure closure(skel, index);
  std::vector<std::vector<Word>> level(1);
  for (int v = 0; v < static_cast<int>(skel.vertices.size()); ++v)
    level[0].push_back(Word::vertex(v));
  std::set<Word, WordLexLess> processed;
  int max_len = total_cap > 0 ? std::min(total_cap, bound.total()) : bound.total();

  for (int len = 1; len <= max_len; ++len) {
    std::vector<Word> current;
    for (const Word& w : level[len - 1]) {
      for (int32_t e = 0; e < static_cast<int32_t>(skel.edges.size()); ++e) {
        int range = w.is_vertex() ? w.anchor() : skel.edges[w.leftmost()].range;
        if (skel.edges[e].source != range) continue;
        std::vector<int32_t> gens{e};
        gens.insert(gens.end(), w.gens().begin(), w.gens().end());
        Word word = Word::from_generators(std::move(gens));
        MultiDegree d = MultiDegree::zero(skel.rank);
        for (int32_t g : word.gens()) d += skel.edges[g].degree;
        if (!d.dominated_by(bound)) continue;
        current.push_back(word);
      }
    }
    level.push_back(current);

    for (const Word& word : current) {
      ++report.words_checked;
      const Word& rep = closure.representative(word);
      if (!processed.insert(rep).second) continue;

      MultiDegree d = MultiDegree::zero(skel.rank);
      for (int32_t g : word.gens()) d += skel.edges[g].degree;

      // Gather every (prefix class, suffix class) pair by prefix degree.
      std::map<MultiDegree, std::set<std::pair<Word, Word>>> splits;
      for (const Word& member : closure.members(word)) {
        MultiDegree pre = MultiDegree::zero(skel.rank);
        for (int cut = 0; cut <= member.length(); ++cut) {
          if (cut > 0) pre += skel.edges[member.gen(cut - 1)].degree;
          Word prefix = cut == 0 ? Word::vertex(skel.edges[member.leftmost()].range)
                                 : member.factor(0, cut);
          Word suffix = cut == member.length()
                            ? Word::vertex(skel.edges[member.rightmost()].source)
                            : member.factor(cut, member.length() - cut);
          splits[pre].insert({closure.representative(prefix), closure.representative(suffix)});
        }
      }
      for (const MultiDegree& m : sub_degrees(d)) {
        auto it = splits.find(m);
        size_t count = it == splits.end() ? 0 : it->second.size();
        if (count == 0)
          fail(FactorizationIssue::Type::MissingFactorization,
               "class of " + word_ids(skel, word) + " has no factorization at split (" +
                   std::to_string(m[0]) + ",...)");
        else if (count > 1)
          fail(FactorizationIssue::Type::AmbiguousFactorization,
               "class of " + word_ids(skel, word) + " has " + std::to_string(count) +
                   " factorizations at a split");
      }
    }
  }
  return report;
}

KGraphCategory::KGraphCategory(KGraphSkeleton skel)
    : PathCategory(Kind::kgraph, skel.rank, true), skel_(std::move(skel)) {
  vertex_names_ = skel_.vertices;
  generators_ = skel_.edges;
  square_index_ = build_square_index(skel_);
}

std::optional<std::pair<int32_t, int32_t>> KGraphCategory::square_partner(int32_t a, int32_t b) const {
  auto it = square_index_.find({a, b});
  if (it == square_index_.end() || it->second.size() != 1) return std::nullopt;
  return it->second.front();
}

Word KGraphCategory::normal_form(Word w) const {
  if (w.is_vertex() || w.length() == 1) return w;
  std::vector<int32_t> gens(w.gens().begin(), w.gens().end());
  // Bubble color-sort: each swap removes exactly one color inversion.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < gens.size(); ++i) {
      if (skel_.edges[gens[i]].color >= skel_.edges[gens[i + 1]].color) continue;
      auto partner = square_partner(gens[i], gens[i + 1]);
      if (!partner)
        throw Error(ErrorCode::UpstreamUnchecked,
                    "no unique square for pair " + skel_.edges[gens[i]].id + " " +
                        skel_.edges[gens[i + 1]].id);
      gens[i] = partner->first;
      gens[i + 1] = partner->second;
      changed = true;
    }
  }
  return Word::from_generators(std::move(gens));
}

bool KGraphCategory::has_exact_certificate() {
  if (local_certificate_) return *local_certificate_;
  auto verdict = [this](bool ok) {
    local_certificate_ = ok;
    return ok;
  };
  // Every composable bichromatic pair in exactly one square, per side.
  for (int32_t a = 0; a < static_cast<int32_t>(skel_.edges.size()); ++a)
    for (int32_t b = 0; b < static_cast<int32_t>(skel_.edges.size()); ++b) {
      if (skel_.edges[a].color == skel_.edges[b].color) continue;
      if (skel_.edges[a].source != skel_.edges[b].range) continue;
      auto it = square_index_.find({a, b});
      if (it == square_index_.end() || it->second.size() != 1) return verdict(false);
      auto [p, q] = it->second.front();
      if (skel_.edges[p].color != skel_.edges[b].color ||
          skel_.edges[q].color != skel_.edges[a].color)
        return verdict(false);
      if (skel_.edges[p].range != skel_.edges[a].range ||
          skel_.edges[q].source != skel_.edges[b].source)
        return verdict(false);
    }
  // Associativity on tricolored triples: the two swap routes sorting the
  // outer pair must agree.
  auto swap_at = [this](std::array<int32_t, 3> w, int i) -> std::optional<std::array<int32_t, 3>> {
    auto partner = square_partner(w[i], w[i + 1]);
    if (!partner) return std::nullopt;
    w[i] = partner->first;
    w[i + 1] = partner->second;
    return w;
  };
  for (int32_t a = 0; a < static_cast<int32_t>(skel_.edges.size()); ++a)
    for (int32_t b = 0; b < static_cast<int32_t>(skel_.edges.size()); ++b)
      for (int32_t c = 0; c < static_cast<int32_t>(skel_.edges.size()); ++c) {
        const auto& ea = skel_.edges[a];
        const auto& eb = skel_.edges[b];
        const auto& ec = skel_.edges[c];
        if (ea.color == eb.color || eb.color == ec.color || ea.color == ec.color) continue;
        if (ea.source != eb.range || eb.source != ec.range) continue;
        std::array<int32_t, 3> w{a, b, c};
        auto r1 = swap_at(w, 0);
        auto r12 = r1 ? swap_at(*r1, 1) : std::nullopt;
        auto r121 = r12 ? swap_at(*r12, 0) : std::nullopt;
        auto r2 = swap_at(w, 1);
        auto r21 = r2 ? swap_at(*r2, 0) : std::nullopt;
        auto r212 = r21 ? swap_at(*r21, 1) : std::nullopt;
        if (!r121 || !r212 || *r121 != *r212) return verdict(false);
      }
  return verdict(true);
}

void KGraphCategory::ensure_verified(int length_bound) {
  if (verified_bound_ >= length_bound) return;
  if (has_exact_certificate()) {
    verified_bound_ = std::numeric_limits<int>::max();
    return;
  }
  MultiDegree bound(std::vector<int>(skel_.rank, length_bound));
  FactorizationReport report = check_factorization(skel_, bound, length_bound);
  last_report_ = report;
  if (!report.passed)
    throw Error(ErrorCode::UpstreamUnchecked,
                "factorization check failed: " +
                    (report.issues.empty() ? std::string("unknown") : report.issues.front().message));
  verified_bound_ = length_bound;
}

std::map<MultiDegree, std::vector<Word>> KGraphCategory::classes_by_degree(int max_total_degree) const {
  std::map<MultiDegree, std::vector<Word>> grouped;
  for (const auto& level : classes_by_length(max_total_degree))
    for (const Word& w : level) grouped[degree_of(w)].push_back(w);
  return grouped;
}

}  // namespace fock
