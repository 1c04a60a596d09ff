// operators.hpp -- creation operators on the truncated Fock space, level
// projections, block diagonals, Cesaro sums and Fourier coefficients.
//
// Truncation semantics: images of length above the truncation map to zero
// (finite-rank compression).  Level-raising compositions compress exactly, so
// multiplicativity survives truncation; isometry identities hold away from
// the top level and are checked on masked levels.
#pragma once

#include <map>
#include <vector>

#include "fock/basis.hpp"
#include "fock/symbolic.hpp"
#include "fock/types.hpp"

namespace fock {

// L_mu: xi_nu -> xi_{mu nu} when s(mu) = r(nu), else 0.
SparseMatrix left_creation(const FockBasis& basis, const Word& mu);

// R_mu~: xi_nu -> xi_{nu mu} when r(mu) = s(nu), else 0.
SparseMatrix right_creation(const FockBasis& basis, const Word& mu);

// P_v = L_v, the projection onto classes with range v.
SparseMatrix vertex_projection(const FockBasis& basis, int vertex);

// E_i, the projection onto level i.
SparseMatrix level_projection(const FockBasis& basis, int level);

// Sum of E_0..E_max_level.
SparseMatrix level_mask(const FockBasis& basis, int max_level);

// Phi_j(A) = sum_l E_l A E_{l+j}, the j-th block diagonal.
SparseMatrix diagonal_part(const FockBasis& basis, const SparseMatrix& a, int j);

// Sigma_k(A) = sum_{|j|<k} (1 - |j|/k) Phi_j(A).
SparseMatrix cesaro_sum(const FockBasis& basis, const SparseMatrix& a, int k);

// The sequence ||Sigma_k(A)h - Ah|| for k = 1..k_max.
std::vector<double> cesaro_convergence_profile(const FockBasis& basis, const SparseMatrix& a,
                                               const DenseVector& h, int k_max);

// a_w = <A xi_{s(w)}, xi_w> keyed by basis index.
using FourierCoefficients = std::map<int, Complex>;
FourierCoefficients fourier_coefficients(const FockBasis& basis, const SparseMatrix& a);

// Sum of a_w L_w over coefficients above the tolerance.
SparseMatrix fourier_reconstruction(const FockBasis& basis, const FourierCoefficients& coeffs,
                                    double tol = kRelationTol);

SymbolicElement to_symbolic(const FockBasis& basis, const FourierCoefficients& coeffs,
                            double tol = kRelationTol);

// Sparse triplets sorted by (row, col); the JSON export order.
std::vector<std::tuple<int, int, Complex>> sorted_triplets(const SparseMatrix& a);

}  // namespace fock
