// verify.cpp -- relation checks for the left regular family.

#include "fock/verify.hpp"

#include <algorithm>
#include <set>

#include "fock/operators.hpp"
#include "fock/presentation.hpp"

namespace fock {

namespace {

double defect_norm(const SparseMatrix& x, const SparseMatrix& y) {
  SparseMatrix d = x - y;
  return frobenius_norm(d);
}

double masked_defect(const SparseMatrix& mask, const SparseMatrix& x, const SparseMatrix& y) {
  SparseMatrix d = mask * SparseMatrix(x - y) * mask;
  return frobenius_norm(d);
}

SparseMatrix adjoint(const SparseMatrix& a) { return a.adjoint(); }

}  // namespace

int default_safe_level_bound(const FockBasis& basis, int max_word_length) {
  return std::max(0, basis.truncation() - std::max(1, max_word_length));
}

RelationReport verify_ckt(const FockBasis& basis, int safe_level_bound, double tol) {
  RelationReport report;
  report.safe_level_bound = safe_level_bound;
  report.tolerance = tol;
  const PathCategory& cat = basis.category();
  SparseMatrix mask = level_mask(basis, safe_level_bound);

  std::vector<SparseMatrix> edge_ops;
  for (int e = 0; e < cat.generator_count(); ++e)
    edge_ops.push_back(left_creation(basis, Word::generator(e)));

  for (int e = 0; e < cat.generator_count(); ++e) {
    SparseMatrix lhs = adjoint(edge_ops[e]) * edge_ops[e];
    SparseMatrix rhs = vertex_projection(basis, cat.generators()[e].source);
    double defect = masked_defect(mask, lhs, rhs);
    report.add({"(I) L_" + cat.generators()[e].id + "* L_" + cat.generators()[e].id +
                    " = P_s on levels <= " + std::to_string(safe_level_bound),
                defect <= tol, defect, ""});
  }

  for (int e = 0; e < cat.generator_count(); ++e) {
    for (int f = e + 1; f < cat.generator_count(); ++f) {
      SparseMatrix prod = adjoint(edge_ops[e]) * edge_ops[f];
      double defect = frobenius_norm(prod);
      report.add({"range orthogonality L_" + cat.generators()[e].id + "* L_" +
                      cat.generators()[f].id + " = 0",
                  defect <= tol, defect, ""});
    }
  }

  for (int v = 0; v < cat.vertex_count(); ++v) {
    std::vector<int> incoming;
    for (int e = 0; e < cat.generator_count(); ++e)
      if (cat.generators()[e].range == v) incoming.push_back(e);
    if (incoming.empty()) continue;  // sources are exempt

    SparseMatrix sum(basis.dimension(), basis.dimension());
    for (int e : incoming) sum = sum + SparseMatrix(edge_ops[e] * adjoint(edge_ops[e]));
    SparseMatrix defect_op = vertex_projection(basis, v) - sum;

    // The complement must be exactly the vacuum projection: nonzero classes
    // with range v are claimed by exactly one edge range.
    std::vector<Triplet> vac{{basis.vertex_index(v), basis.vertex_index(v), Complex(1.0, 0.0)}};
    SparseMatrix vacuum(basis.dimension(), basis.dimension());
    vacuum.setFromTriplets(vac.begin(), vac.end());
    double defect = defect_norm(defect_op, vacuum);
    report.add({"sum_{r(e)=" + cat.vertex_names()[v] + "} L_eL_e* <= P_v, strict at the vacuum",
                defect <= tol, defect,
                "P_v - sum equals the vacuum projection; CK equality holds off level 0 "
                "(the reverse strict inequality P_v < sum fails for the left regular family)"});
  }
  return report;
}

namespace {

void check_vertex_orthogonality(RelationReport& report, const FockBasis& basis, double tol) {
  const PathCategory& cat = basis.category();
  for (int u = 0; u < cat.vertex_count(); ++u) {
    for (int v = u + 1; v < cat.vertex_count(); ++v) {
      SparseMatrix prod = vertex_projection(basis, u) * vertex_projection(basis, v);
      double defect = frobenius_norm(prod);
      report.add({"vertex projections L_" + cat.vertex_names()[u] + " L_" + cat.vertex_names()[v] +
                      " = 0",
                  defect <= tol, defect, ""});
    }
  }
}

void check_multiplicativity(RelationReport& report, const FockBasis& basis, double tol) {
  const PathCategory& cat = basis.category();
  int worst_pairs = 0;
  double worst = 0.0;
  std::string worst_label;
  for (int i = 0; i < basis.dimension(); ++i) {
    const Word& mu1 = basis.class_word(i);
    if (mu1.is_vertex()) continue;
    SparseMatrix left = left_creation(basis, mu1);
    for (int j = 0; j < basis.dimension(); ++j) {
      const Word& mu2 = basis.class_word(j);
      if (mu2.is_vertex()) continue;
      if (!cat.composable(mu1, mu2)) continue;
      if (mu1.length() + mu2.length() > basis.truncation()) continue;
      SparseMatrix prod = left * left_creation(basis, mu2);
      SparseMatrix direct = left_creation(basis, cat.normal_form(cat.concat(mu1, mu2)));
      double defect = defect_norm(prod, direct);
      ++worst_pairs;
      if (defect > worst) {
        worst = defect;
        worst_label = basis.class_label(i) + " | " + basis.class_label(j);
      }
    }
  }
  report.add({"multiplicativity L_mu1 L_mu2 = L_{mu1 mu2} over " + std::to_string(worst_pairs) +
                  " composable pairs",
              worst <= tol, worst, worst_label.empty() ? "" : "worst pair: " + worst_label});
}

void check_isometry(RelationReport& report, const FockBasis& basis, int safe_level_bound,
                    double tol) {
  const PathCategory& cat = basis.category();
  double worst = 0.0;
  std::string worst_label;
  int checked = 0;
  for (int i = 0; i < basis.dimension(); ++i) {
    const Word& mu = basis.class_word(i);
    if (mu.is_vertex()) continue;
    int bound = std::min(safe_level_bound, basis.truncation() - mu.length());
    if (bound < 0) continue;
    SparseMatrix mask = level_mask(basis, bound);
    SparseMatrix op = left_creation(basis, mu);
    SparseMatrix lhs = adjoint(op) * op;
    SparseMatrix rhs = vertex_projection(basis, cat.source_of(mu));
    double defect = masked_defect(mask, lhs, rhs);
    ++checked;
    if (defect > worst) {
      worst = defect;
      worst_label = basis.class_label(i);
    }
  }
  report.add({"isometry L_mu* L_mu = L_{s(mu)} on masked levels over " + std::to_string(checked) +
                  " classes",
              worst <= tol, worst, worst_label.empty() ? "" : "worst class: " + worst_label});
}

}  // namespace

RelationReport verify_kgraph_family(const FockBasis& basis, const MultiDegree& n,
                                    int safe_level_bound, double tol) {
  RelationReport report;
  report.safe_level_bound = safe_level_bound;
  report.tolerance = tol;
  const PathCategory& cat = basis.category();

  check_vertex_orthogonality(report, basis, tol);
  check_multiplicativity(report, basis, tol);
  check_isometry(report, basis, safe_level_bound, tol);

  // Same-degree ranges are mutually orthogonal.
  std::vector<int> degree_n;
  for (int i = 0; i < basis.dimension(); ++i)
    if (cat.degree_of(basis.class_word(i)) == n) degree_n.push_back(i);
  double worst = 0.0;
  for (size_t a = 0; a < degree_n.size(); ++a) {
    SparseMatrix oa = left_creation(basis, basis.class_word(degree_n[a]));
    for (size_t b = a + 1; b < degree_n.size(); ++b) {
      SparseMatrix ob = left_creation(basis, basis.class_word(degree_n[b]));
      worst = std::max(worst, frobenius_norm(SparseMatrix(adjoint(oa) * ob)));
    }
  }
  report.add({"degree-n ranges mutually orthogonal (" + std::to_string(degree_n.size()) +
                  " classes)",
              worst <= tol, worst, ""});

  // Degree-n sum relation, per vertex: the defect is the projection onto
  // classes whose degree does not dominate n.
  for (int v = 0; v < cat.vertex_count(); ++v) {
    std::vector<int> mus;
    for (int i : degree_n)
      if (basis.range_vertex(i) == v) mus.push_back(i);
    if (mus.empty()) continue;
    SparseMatrix sum(basis.dimension(), basis.dimension());
    for (int i : mus) {
      SparseMatrix op = left_creation(basis, basis.class_word(i));
      sum = sum + SparseMatrix(op * adjoint(op));
    }
    SparseMatrix defect_op = vertex_projection(basis, v) - sum;

    std::vector<Triplet> expected_triplets;
    int expected_rank = 0;
    for (int i = 0; i < basis.dimension(); ++i) {
      if (basis.range_vertex(i) != v) continue;
      MultiDegree d = cat.degree_of(basis.class_word(i));
      if (n.dominated_by(d)) continue;  // factors through a degree-n prefix
      expected_triplets.emplace_back(i, i, Complex(1.0, 0.0));
      ++expected_rank;
    }
    SparseMatrix expected(basis.dimension(), basis.dimension());
    expected.setFromTriplets(expected_triplets.begin(), expected_triplets.end());
    double defect = defect_norm(defect_op, expected);
    report.add({"degree-n sum relation at " + cat.vertex_names()[v], defect <= tol, defect,
                "P_v - sum is the projection onto the " + std::to_string(expected_rank) +
                    " classes whose degree does not dominate n (vacuum included)"});
  }
  return report;
}

RelationReport verify_category_family(const FockBasis& basis, int safe_level_bound, double tol) {
  RelationReport report;
  report.safe_level_bound = safe_level_bound;
  report.tolerance = tol;

  check_vertex_orthogonality(report, basis, tol);
  check_multiplicativity(report, basis, tol);
  check_isometry(report, basis, safe_level_bound, tol);

  // Identified words must give identical operators, built as products of
  // generator matrices so the comparison is not circular.
  if (const auto* presented = dynamic_cast<const PresentedCategory*>(&basis.category())) {
    const auto& pres = presented->presentation();
    auto product_of = [&basis](const Word& w) {
      SparseMatrix out;
      if (w.is_vertex()) return vertex_projection(basis, w.anchor());
      out = left_creation(basis, Word::generator(w.gen(0)));
      for (int i = 1; i < w.length(); ++i)
        out = SparseMatrix(out * left_creation(basis, Word::generator(w.gen(i))));
      return out;
    };
    for (size_t r = 0; r < pres.relations.size(); ++r) {
      const auto& rel = pres.relations[r];
      double defect = defect_norm(product_of(rel.lhs), product_of(rel.rhs));
      report.add({"identified words give identical operators (relation " + std::to_string(r + 1) +
                      ")",
                  defect <= tol, defect, ""});
    }
  }
  return report;
}

}  // namespace fock
