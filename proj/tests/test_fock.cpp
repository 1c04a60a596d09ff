// Fock bases, creation operators, relation checks, Cesaro sums, Fourier
// coefficients.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fock/analysis.hpp"
#include "fock/operators.hpp"
#include "fock/rng.hpp"
#include "fock/verify.hpp"

using namespace fock;

namespace {

Structure load(const std::string& text) {
  auto result = load_structure(text, "test", AnalysisOptions{});
  REQUIRE(std::holds_alternative<Structure>(result));
  return std::move(std::get<Structure>(result));
}

const char* kSingleLoop = "graph { vertices x; edge e: x -> x; }";
const char* kToeplitz = "graph { vertices v1 v2; edge e: v1 -> v1; edge f: v1 -> v2; }";
const char* kC4 =
    "graph { vertices v1 v2 v3 v4; edge e1: v1 -> v2; edge e2: v2 -> v3;"
    " edge e3: v3 -> v4; edge e4: v4 -> v1; }";
const char* kOneSquare =
    "kgraph 2 { vertices u1 u2 u3 u4; edge b1: 1: u1 -> u2; edge b2: 1: u3 -> u4;"
    " edge r1: 2: u1 -> u3; edge r2: 2: u2 -> u4; square: b2 r1 = r2 b1; }";
const char* kThreeLoop =
    "category { vertices x; edge a: x -> x; edge b: x -> x; edge c: x -> x;"
    " relation: a b = b c; relation: b c = c a; relation: a c = c b;"
    " relation: c b = b a; relation: a a = b b; relation: b b = c c;"
    " degree a = (1); degree b = (1); degree c = (1); }";
const char* kLoops =
    "kgraph 3 { vertices v; edge e: 1: v -> v; edge f: 2: v -> v; edge g: 3: v -> v;"
    " square: e f = f e; square: e g = g e; square: f g = g f; }";

DenseMatrix dense(const SparseMatrix& m) { return DenseMatrix(m); }

// Level block of an operator: rows at level `to`, columns at level `from`.
DenseMatrix level_block(const FockBasis& basis, const SparseMatrix& op, int to, int from) {
  DenseMatrix full = dense(op);
  const auto& rows = basis.level(to);
  const auto& cols = basis.level(from);
  DenseMatrix block(rows.size(), cols.size());
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < cols.size(); ++c) block(r, c) = full(rows[r], cols[c]);
  return block;
}

}  // namespace

TEST_CASE("basis dimensions") {
  Structure one_square = load(kOneSquare);
  one_square.category->ensure_verified(2);
  CHECK(FockBasis(*one_square.category, 2).dimension() == 9);

  Structure loop = load(kSingleLoop);
  loop.category->ensure_verified(5);
  CHECK(FockBasis(*loop.category, 5).dimension() == 6);

  Structure three = load(kThreeLoop);
  three.category->ensure_verified(4);
  FockBasis basis(*three.category, 4);
  CHECK(basis.dimension() == 13);
  CHECK(basis.level_sizes() == std::vector<int>{1, 3, 3, 3, 3});
}

TEST_CASE("an unverified structure cannot back a basis") {
  Structure three = load(kThreeLoop);
  CHECK_THROWS_AS(FockBasis(*three.category, 4), Error);
}

TEST_CASE("the single-loop creation operator is the truncated shift") {
  Structure loop = load(kSingleLoop);
  loop.category->ensure_verified(3);
  FockBasis basis(*loop.category, 3);
  SparseMatrix le = left_creation(basis, Word::generator(0));
  DenseMatrix m = dense(le);
  for (int row = 0; row < 4; ++row)
    for (int col = 0; col < 4; ++col)
      CHECK(m(row, col) == (row == col + 1 ? Complex(1, 0) : Complex(0, 0)));

  // Abelian case: the right creation coincides.
  CHECK(frobenius_norm(SparseMatrix(right_creation(basis, Word::generator(0)) - le)) == 0.0);
}

TEST_CASE("level blocks of the three-loop creations are the permutation matrices") {
  Structure three = load(kThreeLoop);
  three.category->ensure_verified(8);
  FockBasis basis(*three.category, 8);

  DenseMatrix a_expected(3, 3), b_expected(3, 3), c_expected(3, 3);
  a_expected << 1, 0, 0, 0, 0, 1, 0, 1, 0;
  b_expected << 0, 1, 0, 1, 0, 0, 0, 0, 1;
  c_expected << 0, 0, 1, 0, 1, 0, 1, 0, 0;
  DenseMatrix a1(3, 1), b1(3, 1), c1(3, 1);
  a1 << 1, 0, 0;
  b1 << 0, 1, 0;
  c1 << 0, 0, 1;

  SparseMatrix la = left_creation(basis, Word::generator(0));
  SparseMatrix lb = left_creation(basis, Word::generator(1));
  SparseMatrix lc = left_creation(basis, Word::generator(2));

  CHECK(level_block(basis, la, 1, 0) == a1);
  CHECK(level_block(basis, lb, 1, 0) == b1);
  CHECK(level_block(basis, lc, 1, 0) == c1);
  for (int level = 1; level <= 7; ++level) {
    CHECK(level_block(basis, la, level + 1, level) == a_expected);
    CHECK(level_block(basis, lb, level + 1, level) == b_expected);
    CHECK(level_block(basis, lc, level + 1, level) == c_expected);
  }
}

TEST_CASE("vertex operators project onto range classes") {
  Structure toep = load(kToeplitz);
  toep.category->ensure_verified(4);
  FockBasis basis(*toep.category, 4);
  SparseMatrix p = vertex_projection(basis, 0);  // v1
  DenseMatrix m = dense(p);
  for (int i = 0; i < basis.dimension(); ++i)
    CHECK(m(i, i) == (basis.range_vertex(i) == 0 ? Complex(1, 0) : Complex(0, 0)));
}

TEST_CASE("right creation by an edge fills a single column") {
  Structure toep = load(kToeplitz);
  toep.category->ensure_verified(4);
  FockBasis basis(*toep.category, 4);
  int f = 1;  // edges sorted by id: e, f
  SparseMatrix rf = right_creation(basis, Word::generator(f));
  // r(f) = v2 and only xi_{v2} has source v2, so one column is nonzero.
  auto triplets = sorted_triplets(rf);
  REQUIRE(triplets.size() == 1);
  CHECK(std::get<0>(triplets[0]) == basis.index_of(Word::generator(f)));
  CHECK(std::get<1>(triplets[0]) == basis.vertex_index(1));

  // Right creation by a vertex projects onto source classes.
  SparseMatrix rv = right_creation(basis, Word::vertex(0));
  DenseMatrix m = dense(rv);
  for (int i = 0; i < basis.dimension(); ++i)
    CHECK(m(i, i) == (basis.source_vertex(i) == 0 ? Complex(1, 0) : Complex(0, 0)));
}

TEST_CASE("graph relations verify on the loop-plus-exit graph") {
  Structure toep = load(kToeplitz);
  toep.category->ensure_verified(6);
  FockBasis basis(*toep.category, 6);
  auto report = verify_ckt(basis, 5);
  CHECK(report.all_passed);
}

TEST_CASE("on the cycle the equality defect is exactly the vacuum at every vertex") {
  Structure c4 = load(kC4);
  c4.category->ensure_verified(6);
  FockBasis basis(*c4.category, 6);
  CHECK(verify_ckt(basis, 5).all_passed);
  // Direct recomputation: P_v - sum equals the vacuum projection.
  for (int v = 0; v < 4; ++v) {
    SparseMatrix sum(basis.dimension(), basis.dimension());
    for (int e = 0; e < 4; ++e) {
      if (basis.category().generators()[e].range != v) continue;
      SparseMatrix op = left_creation(basis, Word::generator(e));
      sum = sum + SparseMatrix(op * SparseMatrix(op.adjoint()));
    }
    DenseMatrix defect = dense(vertex_projection(basis, v)) - dense(sum);
    for (int i = 0; i < basis.dimension(); ++i)
      for (int j = 0; j < basis.dimension(); ++j) {
        Complex expected = (i == j && i == basis.vertex_index(v)) ? Complex(1, 0) : Complex(0, 0);
        CHECK(std::abs(defect(i, j) - expected) < 1e-15);
      }
  }
}

TEST_CASE("parallel edges have exactly orthogonal ranges") {
  Structure two = load("graph { vertices u v; edge e: u -> v; edge f: u -> v; }");
  two.category->ensure_verified(3);
  FockBasis basis(*two.category, 3);
  SparseMatrix le = left_creation(basis, Word::generator(0));
  SparseMatrix lf = left_creation(basis, Word::generator(1));
  CHECK(frobenius_norm(SparseMatrix(SparseMatrix(le.adjoint()) * lf)) == 0.0);
}

TEST_CASE("k-graph family relations with the degree-sum defect identified") {
  Structure loops = load(kLoops);
  loops.category->ensure_verified(4);
  FockBasis basis(*loops.category, 4);
  auto report = verify_kgraph_family(basis, MultiDegree({1, 0, 0}), 3);
  CHECK(report.all_passed);
  // The defect projection rank: classes whose degree misses color 1,
  // i.e. monomials f^b g^c with b + c <= 4.
  bool found = false;
  for (const auto& check : report.checks) {
    if (check.relation.rfind("degree-n sum", 0) == 0) {
      found = true;
      CHECK(check.detail.find("15 classes") != std::string::npos);
    }
  }
  CHECK(found);
}

TEST_CASE("identified words give identical operators") {
  Structure one_square = load(kOneSquare);
  one_square.category->ensure_verified(4);
  FockBasis basis(*one_square.category, 4);
  const auto& gens = one_square.category->generators();
  auto index_of = [&gens](const std::string& id) {
    for (size_t i = 0; i < gens.size(); ++i)
      if (gens[i].id == id) return static_cast<int>(i);
    return -1;
  };
  SparseMatrix lhs = SparseMatrix(left_creation(basis, Word::generator(index_of("b2"))) *
                                  left_creation(basis, Word::generator(index_of("r1"))));
  SparseMatrix rhs = SparseMatrix(left_creation(basis, Word::generator(index_of("r2"))) *
                                  left_creation(basis, Word::generator(index_of("b1"))));
  CHECK(frobenius_norm(SparseMatrix(lhs - rhs)) == 0.0);

  // Distinct vertex projections annihilate each other.
  CHECK(frobenius_norm(SparseMatrix(vertex_projection(basis, 0) * vertex_projection(basis, 1))) ==
        0.0);

  Structure three = load(kThreeLoop);
  three.category->ensure_verified(6);
  FockBasis tbasis(*three.category, 6);
  auto report = verify_category_family(tbasis, 4);
  CHECK(report.all_passed);
}

TEST_CASE("partial isometries, commutation, and multiplicativity across structures") {
  for (const char* text : {kSingleLoop, kToeplitz, kC4, kOneSquare, kThreeLoop}) {
    Structure s = load(text);
    s.category->ensure_verified(6);
    FockBasis basis(*s.category, 6);
    const PathCategory& cat = basis.category();

    auto levels = cat.classes_by_length(2);
    std::vector<Word> words;
    for (const auto& level : levels) words.insert(words.end(), level.begin(), level.end());

    for (const Word& mu : words) {
      SparseMatrix lmu = left_creation(basis, mu);
      // L_mu* L_mu is a 0/1 diagonal on the masked subspace.
      SparseMatrix mask = level_mask(basis, basis.truncation() - std::max(1, mu.length()));
      DenseMatrix gram = dense(SparseMatrix(mask * SparseMatrix(SparseMatrix(lmu.adjoint()) * lmu) * mask));
      for (int i = 0; i < gram.rows(); ++i)
        for (int j = 0; j < gram.cols(); ++j) {
          if (i == j)
            CHECK((std::abs(gram(i, j)) < 1e-15 || std::abs(gram(i, j) - 1.0) < 1e-15));
          else
            CHECK(std::abs(gram(i, j)) < 1e-15);
        }
      // Left and right creations commute exactly under compression.
      for (const Word& nu : words) {
        SparseMatrix rnu = right_creation(basis, nu);
        CHECK(frobenius_norm(SparseMatrix(SparseMatrix(lmu * rnu) - SparseMatrix(rnu * lmu))) <
              1e-15);
      }
    }

    // L_{mu nu} = L_mu L_nu whenever composable.
    for (const Word& mu : words)
      for (const Word& nu : words) {
        if (!cat.composable(mu, nu)) continue;
        SparseMatrix prod = SparseMatrix(left_creation(basis, mu) * left_creation(basis, nu));
        SparseMatrix direct = left_creation(basis, cat.normal_form(cat.concat(mu, nu)));
        CHECK(frobenius_norm(SparseMatrix(prod - direct)) < 1e-15);
      }
  }
}

TEST_CASE("level projections") {
  Structure three = load(kThreeLoop);
  three.category->ensure_verified(4);
  FockBasis basis(*three.category, 4);
  SparseMatrix e0 = level_projection(basis, 0);
  SparseMatrix e2 = level_projection(basis, 2);
  CHECK(dense(e0).trace() == Complex(1, 0));
  CHECK(dense(e2).trace() == Complex(3, 0));
  CHECK(frobenius_norm(SparseMatrix(e0 * e2)) == 0.0);

  SparseMatrix sum(basis.dimension(), basis.dimension());
  for (int level = 0; level <= 4; ++level) sum = sum + level_projection(basis, level);
  CHECK((dense(sum) - DenseMatrix::Identity(basis.dimension(), basis.dimension())).norm() == 0.0);
}

TEST_CASE("block diagonals") {
  Structure loop = load(kSingleLoop);
  loop.category->ensure_verified(6);
  FockBasis basis(*loop.category, 6);
  SparseMatrix le = left_creation(basis, Word::generator(0));

  // L_e raises the level: its only nonzero diagonal is j = -1.
  CHECK(frobenius_norm(SparseMatrix(diagonal_part(basis, le, -1) - le)) == 0.0);
  for (int j = -6; j <= 6; ++j) {
    if (j == -1) continue;
    CHECK(frobenius_norm(diagonal_part(basis, le, j)) == 0.0);
  }

  SparseMatrix a = seeded_random_operator(basis, 42);
  SparseMatrix sum(basis.dimension(), basis.dimension());
  for (int j = -6; j <= 6; ++j) sum = sum + diagonal_part(basis, a, j);
  CHECK(frobenius_norm(SparseMatrix(sum - a)) < 1e-14);

  SparseMatrix diag = level_projection(basis, 2);
  CHECK(frobenius_norm(SparseMatrix(diagonal_part(basis, diag, 0) - diag)) == 0.0);
}

TEST_CASE("Cesaro sums") {
  Structure loop = load(kSingleLoop);
  loop.category->ensure_verified(3);
  FockBasis basis(*loop.category, 3);
  SparseMatrix le = left_creation(basis, Word::generator(0));

  SparseMatrix a = seeded_random_operator(basis, 5);
  CHECK(frobenius_norm(SparseMatrix(cesaro_sum(basis, a, 1) - diagonal_part(basis, a, 0))) == 0.0);

  // Sigma_2(L_e) = (1 - 1/2) L_e.
  CHECK(frobenius_norm(SparseMatrix(cesaro_sum(basis, le, 2) - SparseMatrix(0.5 * le))) < 1e-15);

  // Weight-deficit bound at every k.
  double phi_total = 0.0;
  for (int j = -3; j <= 3; ++j) phi_total += frobenius_norm(diagonal_part(basis, a, j));
  for (int k = 1; k <= 30; ++k) {
    double err = frobenius_norm(SparseMatrix(cesaro_sum(basis, a, k) - a));
    CHECK(err <= (3.0 / k) * phi_total + 1e-12);
  }
}

TEST_CASE("convergence profile closed form for L_e + L_e^2") {
  Structure loop = load(kSingleLoop);
  loop.category->ensure_verified(8);
  FockBasis basis(*loop.category, 8);
  SparseMatrix a = left_creation(basis, Word::generator(0)) +
                   left_creation(basis, Word::from_generators({0, 0}));
  DenseVector h = DenseVector::Zero(basis.dimension());
  h(basis.vertex_index(0)) = Complex(1, 0);

  auto profile = cesaro_convergence_profile(basis, a, h, 40);
  for (int k = 3; k <= 40; ++k) {
    double expected = std::sqrt(1.0 / (double(k) * k) + 4.0 / (double(k) * k));
    CHECK(profile[k - 1] == doctest::Approx(expected).epsilon(1e-12));
  }

  // The identity has an all-zero profile.
  SparseMatrix id(basis.dimension(), basis.dimension());
  id.setIdentity();
  for (double err : cesaro_convergence_profile(basis, id, h, 10)) CHECK(err == 0.0);
}

TEST_CASE("Fourier coefficients read off span elements") {
  Structure loop = load(kSingleLoop);
  loop.category->ensure_verified(6);
  FockBasis basis(*loop.category, 6);
  SparseMatrix a = SparseMatrix(2.0 * left_creation(basis, Word::generator(0))) +
                   SparseMatrix(3.0 * left_creation(basis, Word::from_generators({0, 0})));
  auto coeffs = fourier_coefficients(basis, a);
  CHECK(coeffs.at(basis.index_of(Word::generator(0))) == Complex(2, 0));
  CHECK(coeffs.at(basis.index_of(Word::from_generators({0, 0}))) == Complex(3, 0));
  CHECK(coeffs.at(basis.vertex_index(0)) == Complex(0, 0));

  // The right regular edge operator has the left operator's coefficients.
  auto right_coeffs = fourier_coefficients(basis, right_creation(basis, Word::generator(0)));
  CHECK(right_coeffs.at(basis.index_of(Word::generator(0))) == Complex(1, 0));

  // Reconstruction reproduces the operator, hence all its Cesaro sums.
  SparseMatrix recon = fourier_reconstruction(basis, coeffs);
  CHECK(frobenius_norm(SparseMatrix(recon - a)) == 0.0);
}

TEST_CASE("masked Cesaro sums of the reconstruction agree for random span elements") {
  Structure toep = load(kToeplitz);
  toep.category->ensure_verified(8);
  FockBasis basis(*toep.category, 8);
  std::mt19937_64 rng(31337);
  FourierCoefficients injected;
  for (int i = 0; i < basis.dimension(); ++i) {
    if (basis.level_of(i) > 3) continue;
    injected[i] = Complex(uniform_pm1(rng), uniform_pm1(rng));
  }
  SparseMatrix a = fourier_reconstruction(basis, injected, 0.0);
  SparseMatrix recon = fourier_reconstruction(basis, fourier_coefficients(basis, a));
  SparseMatrix mask = level_mask(basis, basis.truncation() - 3);
  for (int k : {1, 3, 8, 16}) {
    SparseMatrix diff = SparseMatrix(cesaro_sum(basis, recon, k) - cesaro_sum(basis, a, k));
    CHECK(frobenius_norm(SparseMatrix(mask * diff * mask)) < 1e-13);
  }
}
