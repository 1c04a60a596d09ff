// algebra.hpp -- exact finite-dimensional operator algebra analysis:
// span closure, commutant, Jacobson radical, nilpotency, and the
// semisimplicity / reflexivity-hypothesis verdicts.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fock/basis.hpp"
#include "fock/presentation.hpp"
#include "fock/symbolic.hpp"
#include "fock/types.hpp"

namespace fock {

// A subspace of d x d matrices given by an orthonormalized basis; when built
// by span_closure the basis spans all pairwise products (certificate flag).
class FiniteAlgebra {
 public:
  FiniteAlgebra(int ambient_dim, std::vector<DenseMatrix> basis, bool closed, bool has_identity)
      : ambient_(ambient_dim), basis_(std::move(basis)), closed_(closed),
        has_identity_(has_identity) {}

  int ambient_dimension() const { return ambient_; }
  int dimension() const { return static_cast<int>(basis_.size()); }
  const std::vector<DenseMatrix>& basis() const { return basis_; }
  bool multiplicatively_closed() const { return closed_; }
  bool contains_identity() const { return has_identity_; }

 private:
  int ambient_;
  std::vector<DenseMatrix> basis_;
  bool closed_;
  bool has_identity_;
};

// Multiplicatively closed span of the generators, first-seen pivoting,
// Gram-Schmidt residual threshold `tol`.  Throws DimensionCap beyond the cap.
FiniteAlgebra span_closure(const std::vector<DenseMatrix>& generators, bool include_identity,
                           double tol = kRankTol, int dim_cap = kDimensionCap);

// {X : XB = BX for all basis B}, via the null space of the stacked
// commutator map.
FiniteAlgebra commutant(const FiniteAlgebra& alg, double tol = kRankTol);

// span(inner) contained in span(outer), by Gram-Schmidt residuals.
bool span_contains(const FiniteAlgebra& outer, const FiniteAlgebra& inner, double tol = kRankTol);
bool same_span(const FiniteAlgebra& a, const FiniteAlgebra& b, double tol = kRankTol);

// Largest nilpotent ideal via the trace form of the defining representation:
// x in rad iff tr(x b) = 0 for every basis element b.  Valid over complex
// scalars for multiplicatively closed concrete algebras.
FiniteAlgebra jacobson_radical(const FiniteAlgebra& alg, double tol = kRankTol);

struct NilpotencyResult {
  std::optional<int> index;  // least n <= max_power with A^n = 0 on the truncation
  bool exact = false;        // verdict survives truncation removal
  std::string note;
  std::vector<double> power_norms;
};
// Matrix nilpotency on the truncation plus, for operators in span{L_w}, the
// symbolic confirmation that decides exactness.
NilpotencyResult nilpotency_index(const FockBasis& basis, PathCategory& cat,
                                  const SparseMatrix& a, int max_power,
                                  double tol = kRelationTol);

struct CommutantTheoremsReport {
  int fock_dimension = 0;
  int dim_left = 0, dim_right = 0, dim_comm_left = 0, dim_comm_right = 0, dim_bicomm_left = 0;
  bool left_is_commutant_of_right = false;
  bool right_is_commutant_of_left = false;
  bool double_commutant = false;
  bool all_passed = false;
};
// Exact Fock space only (finite path space); throws NotExact otherwise.
CommutantTheoremsReport verify_commutant_theorems(PathCategory& cat, double tol = kRankTol);

enum class Verdict { semisimple, not_semisimple, inconclusive };
const char* to_string(Verdict v);

struct SemisimplicityReport {
  Verdict verdict = Verdict::inconclusive;
  std::string criterion;              // the mathematical statement applied
  std::vector<std::string> evidence;  // ordered evidence chain
  std::optional<std::string> witness;
};
SemisimplicityReport semisimplicity_verdict(PathCategory& cat, int len_bound = 6,
                                            int falsifier_samples = 6, uint64_t seed = 0);

struct ReflexivityVertexReport {
  int vertex = 0;
  bool radiating = false;
  // Single-vertex-subcategory hypothesis; not evaluated by this toolkit.
  std::string loop_subcategory = "not evaluated";
  bool pair_separation_holds = true;  // hypothesis (b)
  std::optional<std::string> witness;
  // k-graph conditions (1)-(3); the theorem needs some condition to fail.
  std::optional<std::array<bool, 3>> kgraph_conditions;
};

struct ReflexivityReport {
  bool applicable = true;  // non-degenerate degree functor present
  std::string conclusion;
  std::vector<ReflexivityVertexReport> vertices;
  int bound = 0;
};
ReflexivityReport reflexivity_hypotheses(PathCategory& cat, int len_bound = 4);

}  // namespace fock
