// verify.hpp -- Cuntz-Krieger(-Toeplitz) and Lambda-family relation checks
// for the left regular family on a truncated Fock space.
#pragma once

#include <string>
#include <vector>

#include "fock/basis.hpp"
#include "fock/types.hpp"

namespace fock {

struct RelationCheck {
  std::string relation;
  bool passed = true;
  double defect = 0.0;      // operator defect in Frobenius norm
  std::string detail;
};

struct RelationReport {
  bool all_passed = true;
  int safe_level_bound = 0;
  double tolerance = kRelationTol;
  std::vector<RelationCheck> checks;

  void add(RelationCheck check) {
    all_passed = all_passed && check.passed;
    checks.push_back(std::move(check));
  }
};

// Directed graphs: (I) L_e*L_e = P_{s(e)} on masked levels; edges have
// pairwise orthogonal ranges; sum_{r(e)=v} L_eL_e* <= P_v with strictness
// witnessed by the vacuum xi_v at every non-source vertex.  For vertices
// where every incoming path is an edge-extension the complement is exactly
// the vacuum (CK equality off level zero).
RelationReport verify_ckt(const FockBasis& basis, int safe_level_bound, double tol = kRelationTol);

// k-graphs: (1) vertex projections mutually orthogonal; (2) multiplicativity
// L_u L_w = L_{uw}; (3) L_mu* L_mu = L_{s(mu)} on masked levels; (4) for the
// requested degree n, sum_{d(mu)=n, r(mu)=v} L_mu L_mu* <= P_v with the
// defect identified as the projection onto classes whose degree does not
// dominate n (the vacuum always among them).
RelationReport verify_kgraph_family(const FockBasis& basis, const MultiDegree& n,
                                    int safe_level_bound, double tol = kRelationTol);

// Categories of paths keep (1)-(3); identified words must give identical
// matrices exactly.
RelationReport verify_category_family(const FockBasis& basis, int safe_level_bound,
                                      double tol = kRelationTol);

// Default mask: one level below the truncation per unit of operator length.
int default_safe_level_bound(const FockBasis& basis, int max_word_length);

}  // namespace fock
