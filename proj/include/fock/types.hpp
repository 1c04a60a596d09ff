// types.hpp -- scalar and matrix aliases shared across the library.
#pragma once

#include <complex>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace fock {

using Complex = std::complex<double>;
using DenseMatrix = Eigen::MatrixXcd;
using DenseVector = Eigen::VectorXcd;
using SparseMatrix = Eigen::SparseMatrix<Complex>;
using Triplet = Eigen::Triplet<Complex>;

// Integer-entry operator identities hold to machine precision.
inline constexpr double kRelationTol = 1e-12;
// Singular-value cutoff for rank / null-space decisions.
inline constexpr double kRankTol = 1e-9;
// Convergence profiles are accepted below this.
inline constexpr double kConvergenceTol = 1e-6;
// Ambient dimension cap for commutant computations (d^4 scaling).
inline constexpr int kDimensionCap = 64;

inline double frobenius_norm(const SparseMatrix& a) {
  return std::sqrt(a.squaredNorm());
}

}  // namespace fock
