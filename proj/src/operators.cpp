// operators.cpp

#include "fock/operators.hpp"

#include <algorithm>

#include "fock/errors.hpp"

namespace fock {

namespace {

SparseMatrix from_triplets(int dim, std::vector<Triplet>& triplets) {
  SparseMatrix m(dim, dim);
  m.setFromTriplets(triplets.begin(), triplets.end());
  m.makeCompressed();
  return m;
}

Word checked_normal_form(const FockBasis& basis, const Word& mu) {
  const PathCategory& cat = basis.category();
  if (!cat.valid_word(mu))
    throw Error(ErrorCode::UnknownPath, "word is not a composable path of the structure");
  return cat.normal_form(mu);
}

}  // namespace

SparseMatrix left_creation(const FockBasis& basis, const Word& mu) {
  const PathCategory& cat = basis.category();
  Word nf = checked_normal_form(basis, mu);
  std::vector<Triplet> triplets;
  for (int col = 0; col < basis.dimension(); ++col) {
    const Word& nu = basis.class_word(col);
    if (cat.source_of(nf) != cat.range_of(nu)) continue;
    if (nf.length() + nu.length() > cat.verified_bound()) continue;  // compressed away
    Word image = cat.normal_form(cat.concat(nf, nu));
    if (image.length() > basis.truncation()) continue;
    triplets.emplace_back(basis.index_of(image), col, Complex(1.0, 0.0));
  }
  return from_triplets(basis.dimension(), triplets);
}

SparseMatrix right_creation(const FockBasis& basis, const Word& mu) {
  const PathCategory& cat = basis.category();
  Word nf = checked_normal_form(basis, mu);
  std::vector<Triplet> triplets;
  for (int col = 0; col < basis.dimension(); ++col) {
    const Word& nu = basis.class_word(col);
    if (cat.range_of(nf) != cat.source_of(nu)) continue;
    if (nf.length() + nu.length() > cat.verified_bound()) continue;
    Word image = cat.normal_form(cat.concat(nu, nf));
    if (image.length() > basis.truncation()) continue;
    triplets.emplace_back(basis.index_of(image), col, Complex(1.0, 0.0));
  }
  return from_triplets(basis.dimension(), triplets);
}

SparseMatrix vertex_projection(const FockBasis& basis, int vertex) {
  return left_creation(basis, Word::vertex(vertex));
}

SparseMatrix level_projection(const FockBasis& basis, int level) {
  std::vector<Triplet> triplets;
  if (level >= 0 && level <= basis.truncation())
    for (int idx : basis.level(level)) triplets.emplace_back(idx, idx, Complex(1.0, 0.0));
  return from_triplets(basis.dimension(), triplets);
}

SparseMatrix level_mask(const FockBasis& basis, int max_level) {
  std::vector<Triplet> triplets;
  for (int len = 0; len <= std::min(max_level, basis.truncation()); ++len)
    for (int idx : basis.level(len)) triplets.emplace_back(idx, idx, Complex(1.0, 0.0));
  return from_triplets(basis.dimension(), triplets);
}

SparseMatrix diagonal_part(const FockBasis& basis, const SparseMatrix& a, int j) {
  std::vector<Triplet> triplets;
  for (int col = 0; col < a.outerSize(); ++col) {
    for (SparseMatrix::InnerIterator it(a, col); it; ++it) {
      int row_level = basis.level_of(static_cast<int>(it.row()));
      int col_level = basis.level_of(col);
      if (col_level == row_level + j) triplets.emplace_back(it.row(), col, it.value());
    }
  }
  return from_triplets(basis.dimension(), triplets);
}

SparseMatrix cesaro_sum(const FockBasis& basis, const SparseMatrix& a, int k) {
  SparseMatrix out(basis.dimension(), basis.dimension());
  for (int j = -(k - 1); j <= k - 1; ++j) {
    double weight = 1.0 - static_cast<double>(std::abs(j)) / k;
    if (std::abs(j) > basis.truncation()) continue;
    out = out + SparseMatrix(weight * diagonal_part(basis, a, j));
  }
  out.prune([](int, int, const Complex& v) { return v != Complex(0.0, 0.0); });
  return out;
}

std::vector<double> cesaro_convergence_profile(const FockBasis& basis, const SparseMatrix& a,
                                               const DenseVector& h, int k_max) {
  DenseVector target = a * h;
  std::vector<double> norms;
  norms.reserve(k_max);
  for (int k = 1; k <= k_max; ++k)
    norms.push_back((cesaro_sum(basis, a, k) * h - target).norm());
  return norms;
}

FourierCoefficients fourier_coefficients(const FockBasis& basis, const SparseMatrix& a) {
  FourierCoefficients coeffs;
  DenseMatrix dense(a);
  for (int idx = 0; idx < basis.dimension(); ++idx) {
    int anchor = basis.vertex_index(basis.source_vertex(idx));
    coeffs[idx] = dense(idx, anchor);
  }
  return coeffs;
}

SparseMatrix fourier_reconstruction(const FockBasis& basis, const FourierCoefficients& coeffs,
                                    double tol) {
  SparseMatrix out(basis.dimension(), basis.dimension());
  for (const auto& [idx, value] : coeffs) {
    if (std::abs(value) <= tol) continue;
    out = out + SparseMatrix(value * left_creation(basis, basis.class_word(idx)));
  }
  out.prune([](int, int, const Complex& v) { return v != Complex(0.0, 0.0); });
  return out;
}

SymbolicElement to_symbolic(const FockBasis& basis, const FourierCoefficients& coeffs, double tol) {
  SymbolicElement out;
  for (const auto& [idx, value] : coeffs)
    if (std::abs(value) > tol) out[basis.class_word(idx)] = value;
  return out;
}

std::vector<std::tuple<int, int, Complex>> sorted_triplets(const SparseMatrix& a) {
  std::vector<std::tuple<int, int, Complex>> out;
  for (int col = 0; col < a.outerSize(); ++col)
    for (SparseMatrix::InnerIterator it(a, col); it; ++it)
      if (it.value() != Complex(0.0, 0.0))
        out.emplace_back(static_cast<int>(it.row()), col, it.value());
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return std::get<0>(x) != std::get<0>(y) ? std::get<0>(x) < std::get<0>(y)
                                            : std::get<1>(x) < std::get<1>(y);
  });
  return out;
}

}  // namespace fock
