// algebra.cpp

#include "fock/algebra.hpp"

#include <algorithm>
#include <array>
#include <deque>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "fock/graph.hpp"
#include "fock/kgraph.hpp"
#include "fock/operators.hpp"

namespace fock {

namespace {

DenseVector vectorize(const DenseMatrix& m) {
  return Eigen::Map<const DenseVector>(m.data(), m.size());
}

// Orthonormal working span with residual-threshold membership tests.
class Span {
 public:
  explicit Span(double tol) : tol_(tol) {}

  // Residual after projecting onto the span; reorthogonalized once.
  DenseVector residual(const DenseVector& v) const {
    DenseVector r = v;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : ortho_) r -= q.dot(r) * q;
    return r;
  }

  bool contains(const DenseVector& v) const {
    return residual(v).norm() <= tol_ * std::max(1.0, v.norm());
  }

  bool add(const DenseVector& v) {
    DenseVector r = residual(v);
    if (r.norm() <= tol_ * std::max(1.0, v.norm())) return false;
    ortho_.push_back(r / r.norm());
    return true;
  }

  int dimension() const { return static_cast<int>(ortho_.size()); }

 private:
  double tol_;
  std::vector<DenseVector> ortho_;
};

}  // namespace

FiniteAlgebra span_closure(const std::vector<DenseMatrix>& generators, bool include_identity,
                           double tol, int dim_cap) {
  int d = 0;
  for (const auto& g : generators) d = std::max<int>(d, static_cast<int>(g.rows()));
  if (include_identity && d == 0) d = 1;
  if (d > dim_cap)
    throw Error(ErrorCode::DimensionCap,
                "ambient dimension " + std::to_string(d) + " exceeds cap " + std::to_string(dim_cap));

  Span span(tol);
  std::vector<DenseMatrix> basis;
  auto try_add = [&](const DenseMatrix& m) {
    if (span.add(vectorize(m))) {
      basis.push_back(m);
      return true;
    }
    return false;
  };

  if (include_identity) try_add(DenseMatrix::Identity(d, d));
  for (const auto& g : generators) try_add(g);

  // Worklist closure over pairwise products.
  size_t processed = 0;
  while (processed < basis.size()) {
    size_t current = processed++;
    size_t count = basis.size();
    for (size_t i = 0; i < count; ++i) {
      try_add(basis[i] * basis[current]);
      if (i != current) try_add(basis[current] * basis[i]);
    }
  }

  bool has_identity = span.contains(vectorize(DenseMatrix::Identity(d, d)));
  return FiniteAlgebra(d, std::move(basis), true, has_identity);
}

FiniteAlgebra commutant(const FiniteAlgebra& alg, double tol) {
  int d = alg.ambient_dimension();
  int dd = d * d;
  DenseMatrix id = DenseMatrix::Identity(d, d);

  // H = sum_i M_i^H M_i where M_i vec(X) = vec(B_i X - X B_i).
  DenseMatrix h = DenseMatrix::Zero(dd, dd);
  for (const auto& b : alg.basis()) {
    DenseMatrix m = DenseMatrix::Zero(dd, dd);
    // vec(BX) = (I (x) B) vec(X); vec(XB) = (B^T (x) I) vec(X)
    for (int col = 0; col < d; ++col)
      for (int row = 0; row < d; ++row)
        for (int k = 0; k < d; ++k) {
          m(col * d + row, col * d + k) += b(row, k);
          m(col * d + row, k * d + row) -= b(k, col);
        }
    h += m.adjoint() * m;
  }

  // Null vectors of the Gram matrix H; the kernel gap is macroscopic for the
  // integer-entry operators here, so a relative eigenvalue cutoff is robust
  // where a cutoff on sqrt(lambda) would drown in eigensolver noise.
  Eigen::SelfAdjointEigenSolver<DenseMatrix> eig(h);
  double scale = std::max(1.0, eig.eigenvalues().cwiseAbs().maxCoeff());
  std::vector<DenseMatrix> basis;
  for (int i = 0; i < dd; ++i) {
    if (eig.eigenvalues()(i) > tol * scale) continue;
    DenseVector v = eig.eigenvectors().col(i);
    basis.push_back(Eigen::Map<const DenseMatrix>(v.data(), d, d));
  }
  // The commutant of any set is multiplicatively closed and unital.
  return FiniteAlgebra(d, std::move(basis), true, true);
}

bool span_contains(const FiniteAlgebra& outer, const FiniteAlgebra& inner, double tol) {
  Span span(tol);
  for (const auto& b : outer.basis()) span.add(vectorize(b));
  for (const auto& b : inner.basis())
    if (!span.contains(vectorize(b))) return false;
  return true;
}

bool same_span(const FiniteAlgebra& a, const FiniteAlgebra& b, double tol) {
  return span_contains(a, b, tol) && span_contains(b, a, tol);
}

FiniteAlgebra jacobson_radical(const FiniteAlgebra& alg, double tol) {
  if (!alg.multiplicatively_closed())
    throw Error(ErrorCode::UpstreamUnchecked, "radical needs a multiplicatively closed basis");
  int m = alg.dimension();
  int d = alg.ambient_dimension();
  if (m == 0) return FiniteAlgebra(d, {}, true, false);

  DenseMatrix gram(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) gram(i, j) = (alg.basis()[i] * alg.basis()[j]).trace();

  // x = sum c_i b_i lies in the radical iff Gram^T c = 0.
  Eigen::JacobiSVD<DenseMatrix> svd(gram.transpose(), Eigen::ComputeFullV);
  double scale = svd.singularValues().size() ? std::max(1.0, svd.singularValues()(0)) : 1.0;
  std::vector<DenseMatrix> ideal;
  for (int col = 0; col < m; ++col) {
    double sv = col < svd.singularValues().size() ? svd.singularValues()(col) : 0.0;
    if (sv > tol * scale) continue;
    DenseMatrix x = DenseMatrix::Zero(d, d);
    for (int i = 0; i < m; ++i) x += svd.matrixV()(i, col) * alg.basis()[i];
    ideal.push_back(std::move(x));
  }
  return FiniteAlgebra(d, std::move(ideal), true, false);
}

NilpotencyResult nilpotency_index(const FockBasis& basis, PathCategory& cat,
                                  const SparseMatrix& a, int max_power, double tol) {
  NilpotencyResult result;
  SparseMatrix power = a;
  for (int n = 1; n <= max_power; ++n) {
    if (n > 1) power = SparseMatrix(power * a);
    double norm = frobenius_norm(power);
    result.power_norms.push_back(norm);
    if (norm <= tol) {
      result.index = n;
      break;
    }
  }
  if (!result.index) {
    result.note = "no vanishing power up to " + std::to_string(max_power);
    return result;
  }

  // Exactness: operators in span{L_w} can be re-expanded symbolically; the
  // left regular representation is faithful on the path algebra, so a
  // vanishing symbolic power survives truncation removal.
  FourierCoefficients coeffs = fourier_coefficients(basis, a);
  SparseMatrix reconstruction = fourier_reconstruction(basis, coeffs, tol);
  SparseMatrix diff = a - reconstruction;
  if (frobenius_norm(diff) > tol) {
    result.note = "operator is not in span{L_w}; verdict limited to the truncation";
    return result;
  }
  SymbolicElement sym = to_symbolic(basis, coeffs, tol);
  int needed = std::max(1, sym_max_length(sym) * *result.index);
  if (!cat.has_exact_certificate() && cat.verified_bound() < needed) {
    result.note = "symbolic confirmation out of verified range; verdict limited to the truncation";
    return result;
  }
  SymbolicNilpotency symbolic = symbolic_nilpotency(cat, sym, *result.index);
  if (symbolic.index && *symbolic.index <= *result.index) {
    result.exact = true;
    result.note = "vanishes identically in the path algebra (power " +
                  std::to_string(*symbolic.index) + ")";
  } else {
    result.note = "nilpotent up to truncation only (symbolic power " +
                  std::to_string(*result.index) + " is nonzero)";
  }
  return result;
}

CommutantTheoremsReport verify_commutant_theorems(PathCategory& cat, double tol) {
  auto finite_length = cat.finite_path_space_length(16);
  if (!finite_length)
    throw Error(ErrorCode::NotExact,
                "path space grows past the probe bound (a cycle); the commutant "
                "identities only hold on the exact Fock space");

  FockBasis basis(cat, *finite_length);
  CommutantTheoremsReport report;
  report.fock_dimension = basis.dimension();

  std::vector<DenseMatrix> left_gens, right_gens;
  for (int v = 0; v < cat.vertex_count(); ++v) {
    left_gens.push_back(DenseMatrix(vertex_projection(basis, v)));
    right_gens.push_back(DenseMatrix(right_creation(basis, Word::vertex(v))));
  }
  for (int e = 0; e < cat.generator_count(); ++e) {
    left_gens.push_back(DenseMatrix(left_creation(basis, Word::generator(e))));
    right_gens.push_back(DenseMatrix(right_creation(basis, Word::generator(e))));
  }

  FiniteAlgebra left = span_closure(left_gens, false, tol);
  FiniteAlgebra right = span_closure(right_gens, false, tol);
  FiniteAlgebra comm_left = commutant(left, tol);
  FiniteAlgebra comm_right = commutant(right, tol);
  FiniteAlgebra bicomm_left = commutant(comm_left, tol);

  report.dim_left = left.dimension();
  report.dim_right = right.dimension();
  report.dim_comm_left = comm_left.dimension();
  report.dim_comm_right = comm_right.dimension();
  report.dim_bicomm_left = bicomm_left.dimension();
  report.left_is_commutant_of_right = same_span(left, comm_right, tol);
  report.right_is_commutant_of_left = same_span(right, comm_left, tol);
  report.double_commutant = same_span(left, bicomm_left, tol);
  report.all_passed = report.left_is_commutant_of_right && report.right_is_commutant_of_left &&
                      report.double_commutant;
  return report;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::semisimple: return "semisimple";
    case Verdict::not_semisimple: return "not-semisimple";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

namespace {

std::string basis_free_label(const PathCategory& cat, const Word& w) {
  if (w.is_vertex()) return cat.vertex_names()[w.anchor()];
  std::string out;
  for (int i = 0; i < w.length(); ++i) {
    if (i) out += ' ';
    out += cat.generators()[w.gen(i)].id;
  }
  return out;
}

// Underlying vertex digraph with generators as edges.
DirectedGraph generator_digraph(const PathCategory& cat) {
  GraphSpec spec;
  spec.vertices = cat.vertex_names();
  for (const auto& g : cat.generators())
    spec.edges.push_back({g.id, cat.vertex_names()[g.source], cat.vertex_names()[g.range]});
  auto validated = DirectedGraph::validate(spec);
  return std::get<DirectedGraph>(validated);
}

}  // namespace

SemisimplicityReport semisimplicity_verdict(PathCategory& cat, int len_bound,
                                            int falsifier_samples, uint64_t seed) {
  SemisimplicityReport report;
  DirectedGraph digraph = generator_digraph(cat);
  CycleCoverReport cycles = every_path_lies_on_cycle(digraph);

  if (cat.kind() == PathCategory::Kind::graph || cat.kind() == PathCategory::Kind::kgraph) {
    report.criterion = "semisimple iff every edge (hence every path) lies on a cycle";
    if (cycles.holds) {
      report.verdict = Verdict::semisimple;
      report.evidence.push_back("every edge has both endpoints in one strongly connected component");
    } else {
      report.verdict = Verdict::not_semisimple;
      report.witness = digraph.edge(*cycles.witness_edge).id;
      report.evidence.push_back("edge '" + *report.witness + "' lies on no cycle");
    }
    if (!cycles.isolated_vertices.empty())
      report.evidence.push_back("note: " + std::to_string(cycles.isolated_vertices.size()) +
                                " isolated vertex classes (the criterion quantifies over edges)");
    return report;
  }

  // Category of paths: one-directional implications only.
  report.criterion =
      "property (P) implies semisimple; semisimple implies every path lies on a cycle";
  if (!cycles.holds) {
    report.verdict = Verdict::not_semisimple;
    report.witness = digraph.edge(*cycles.witness_edge).id;
    report.evidence.push_back("path '" + *report.witness +
                              "' lies on no cycle (no return morphism exists)");
    return report;
  }
  report.evidence.push_back("every path lies on a cycle (necessary condition holds)");

  DegreeFunctorReport degree;
  if (const auto* presented = dynamic_cast<const PresentedCategory*>(&cat))
    degree = check_degree_functor(presented->presentation());
  else {
    degree.present = cat.has_degree_functor();
    for (const auto& g : cat.generators())
      if (g.degree.total() == 0) degree.non_degenerate = false;
  }
  if (!degree.present || !degree.additive || !degree.non_degenerate) {
    report.verdict = Verdict::inconclusive;
    report.evidence.push_back("no non-degenerate degree functor; property (P) route unavailable");
    return report;
  }
  report.evidence.push_back("degree functor present, additive and non-degenerate");

  PropertyP1Report p1 = property_P_part1(cat, len_bound);
  if (!p1.finite) {
    report.verdict = Verdict::inconclusive;
    report.evidence.push_back("minimal path sets not confirmed finite");
    return report;
  }
  report.evidence.push_back(std::string("minimal path sets finite per vertex") +
                            (p1.exact ? " (exact)" : " (bounded)"));

  FalsifierReport falsifier = falsify_property_P_part2(cat, falsifier_samples, 2, seed);
  if (falsifier.counterexample_found) {
    report.verdict = Verdict::inconclusive;
    report.evidence.push_back(
        "falsifier found a candidate violation of the non-nilpotency condition; "
        "the sufficient criterion does not apply");
    return report;
  }
  report.verdict = Verdict::semisimple;
  report.evidence.push_back("non-nilpotency condition survived " +
                            std::to_string(falsifier.samples) +
                            " sampled combinations (randomized, bounded evidence)");
  return report;
}

ReflexivityReport reflexivity_hypotheses(PathCategory& cat, int len_bound) {
  ReflexivityReport report;
  report.bound = len_bound;

  bool non_degenerate = cat.has_degree_functor();
  for (const auto& g : cat.generators())
    if (g.degree.total() == 0) non_degenerate = false;
  if (!non_degenerate) {
    report.applicable = false;
    report.conclusion = "no non-degenerate degree functor; hypotheses not applicable";
    return report;
  }

  cat.ensure_verified(std::max(len_bound + 1, 2));
  auto levels = cat.classes_by_length(len_bound);
  std::vector<Word> all;
  for (const auto& level : levels) all.insert(all.end(), level.begin(), level.end());

  if (cat.kind() == PathCategory::Kind::kgraph) {
    // No vertex may satisfy all three single-vertex obstruction conditions.
    bool some_vertex_obstructs = false;
    for (int v = 0; v < cat.vertex_count(); ++v) {
      ReflexivityVertexReport vr;
      vr.vertex = v;
      std::array<bool, 3> cond{true, true, false};
      std::vector<int> loops;
      for (int e = 0; e < cat.generator_count(); ++e) {
        const auto& gen = cat.generators()[e];
        if (gen.range == v && gen.source != v) cond[0] = false;
        if (gen.range == v && gen.source == v) loops.push_back(e);
      }
      vr.radiating = cond[0];
      std::map<int, int> loops_per_color;
      for (int e : loops) ++loops_per_color[cat.generators()[e].color];
      for (const auto& [color, count] : loops_per_color)
        if (count > 1) cond[1] = false;
      // Condition 3: distinct loop edges mu, mu' and leaving paths with
      // lambda mu = lambda' mu'.
      for (size_t a = 0; a < loops.size() && !cond[2]; ++a) {
        for (size_t b = 0; b < loops.size() && !cond[2]; ++b) {
          if (a == b) continue;
          for (const Word& l1 : all) {
            if (cond[2]) break;
            if (l1.is_vertex() || cat.source_of(l1) != v) continue;
            if (cat.generators()[l1.rightmost()].range == v) continue;  // does not leave
            for (const Word& l2 : all) {
              if (l2.is_vertex() || cat.source_of(l2) != v) continue;
              if (cat.generators()[l2.rightmost()].range == v) continue;
              Word w1 = cat.normal_form(cat.concat(l1, Word::generator(loops[a])));
              Word w2 = cat.normal_form(cat.concat(l2, Word::generator(loops[b])));
              if (w1 == w2) {
                cond[2] = true;
                break;
              }
            }
          }
        }
      }
      vr.kgraph_conditions = cond;
      if (cond[0] && cond[1] && cond[2]) some_vertex_obstructs = true;
      report.vertices.push_back(std::move(vr));
    }
    report.conclusion = some_vertex_obstructs
                            ? "a vertex satisfies all three obstruction conditions; no conclusion"
                            : "no vertex satisfies all three conditions; reflexivity follows";
    return report;
  }

  // Graphs and categories: check hypothesis (b) at each radiating vertex.
  bool all_hold = true;
  bool any_radiating = false;
  for (int v = 0; v < cat.vertex_count(); ++v) {
    ReflexivityVertexReport vr;
    vr.vertex = v;
    vr.radiating = true;
    for (const auto& g : cat.generators())
      if (g.range == v && g.source != v) vr.radiating = false;
    if (!vr.radiating) {
      report.vertices.push_back(std::move(vr));
      continue;
    }
    any_radiating = true;

    std::vector<Word> loops, from_v;
    for (const Word& w : all) {
      if (cat.source_of(w) == v) from_v.push_back(w);
      if (w.is_vertex()) continue;
      if (cat.range_of(w) == v && cat.source_of(w) == v) loops.push_back(w);
    }
    // Distinct loop classes mu1 != mu2 with w1 mu1 ~ w2 mu2 falsify (b).
    for (size_t i = 0; i < loops.size() && vr.pair_separation_holds; ++i) {
      for (size_t j = 0; j < loops.size() && vr.pair_separation_holds; ++j) {
        if (i == j) continue;
        for (const Word& w1 : from_v) {
          if (!vr.pair_separation_holds) break;
          if (w1.length() + loops[i].length() > cat.verified_bound()) continue;
          Word lhs = cat.normal_form(cat.concat(w1, loops[i]));
          for (const Word& w2 : from_v) {
            if (w2.length() + loops[j].length() > cat.verified_bound()) continue;
            if (lhs == cat.normal_form(cat.concat(w2, loops[j]))) {
              vr.pair_separation_holds = false;
              vr.witness = basis_free_label(cat, w1) + " " + basis_free_label(cat, loops[i]) +
                           " = " + basis_free_label(cat, w2) + " " + basis_free_label(cat, loops[j]);
              break;
            }
          }
        }
      }
    }
    all_hold = all_hold && vr.pair_separation_holds;
    report.vertices.push_back(std::move(vr));
  }

  if (!any_radiating)
    report.conclusion = "no radiating vertices; hypotheses hold vacuously and reflexivity follows";
  else if (all_hold)
    report.conclusion =
        "pair separation holds at every radiating vertex; reflexivity follows if every "
        "radiating loop subcategory is reflexive (not evaluated)";
  else
    report.conclusion = "pair separation fails at a radiating vertex; no conclusion";
  return report;
}

}  // namespace fock
