#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "orbitseq/exactla.hpp"

namespace {

using orbitseq::exactla::dimension_error;
using orbitseq::exactla::eigenspace_dim;
using orbitseq::exactla::kernel_basis;
using orbitseq::exactla::Matrix;
using orbitseq::exactla::rank;
using orbitseq::exactla::Rational;
using orbitseq::exactla::Vector;

Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> entry(-3, 3);
  std::bernoulli_distribution sparse(0.4);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (sparse(rng)) continue;
      const int num = entry(rng);
      const int den = 1 + (entry(rng) + 3) % 3;
      m(r, c) = Rational(num, den);  // left unreduced on purpose
    }
  }
  // Force some dependent rows.
  if (rows > 2) {
    for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = m(0, c) * 2 - m(1, c);
  }
  return m;
}

TEST(Rank, IdentityZeroAndDependentRows) {
  EXPECT_EQ(rank(Matrix::identity(2)), 2u);
  EXPECT_EQ(rank(Matrix(3, 4)), 0u);
  const Matrix m{{1, 2}, {2, 4}};
  EXPECT_EQ(oracle::rank_by_minors(m), 1u);
  EXPECT_EQ(rank(m), 1u);
}

TEST(Rank, EmptyShapes) {
  EXPECT_EQ(rank(Matrix(0, 5)), 0u);
  EXPECT_EQ(rank(Matrix(5, 0)), 0u);
}

TEST(Rank, MatchesMinorOracleOnRandomMatrices) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + rng() % 4;
    const std::size_t cols = 1 + rng() % 4;
    const Matrix m = random_matrix(rng, rows, cols);
    EXPECT_EQ(rank(m), oracle::rank_by_minors(m)) << m.to_string();
  }
}

TEST(Rank, TransposeInvariant) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix m = random_matrix(rng, 1 + rng() % 6, 1 + rng() % 6);
    EXPECT_EQ(rank(m), rank(m.transpose()));
  }
}

TEST(KernelBasis, Examples) {
  EXPECT_TRUE(kernel_basis(Matrix::identity(2)).empty());

  const auto k1 = kernel_basis(Matrix{{1, 1}});
  ASSERT_EQ(k1.size(), 1u);
  EXPECT_EQ(k1[0][0], -k1[0][1]);
  EXPECT_NE(k1[0][0], 0);

  const auto k2 = kernel_basis(Matrix{{1, 2}, {2, 4}});
  ASSERT_EQ(k2.size(), 1u);
  // Proportional to (2, -1).
  EXPECT_EQ(k2[0][0] * -1, k2[0][1] * 2);
  EXPECT_NE(k2[0][1], 0);
}

TEST(KernelBasis, RankNullityAndAnnihilation) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix m = random_matrix(rng, 1 + rng() % 6, 1 + rng() % 6);
    const auto kernel = kernel_basis(m);
    EXPECT_EQ(rank(m) + kernel.size(), m.cols());
    for (const auto& v : kernel) {
      EXPECT_TRUE(orbitseq::exactla::is_zero(m.apply(v)));
    }
    if (!kernel.empty()) {
      EXPECT_EQ(rank(Matrix::from_columns(m.cols(), kernel)), kernel.size());
    }
  }
}

TEST(Eigenspace, Examples) {
  EXPECT_EQ(eigenspace_dim(Matrix::identity(3), 1), 3u);
  EXPECT_EQ(eigenspace_dim(Matrix::identity(3), -1), 0u);
  EXPECT_EQ(eigenspace_dim(Matrix{{0, 1}, {1, 0}}, -1), 1u);
  EXPECT_THROW(eigenspace_dim(Matrix(2, 3), 1), dimension_error);
}

TEST(Eigenspace, InvolutionsSplit) {
  // Conjugates of diagonal sign matrices by random invertible matrices.
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    Matrix p = random_matrix(rng, n, n);
    if (n <= 2 || rank(p) < n) p = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) p(i, i) += 7;  // strictly diagonally dominant
    Matrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = (rng() % 2) ? 1 : -1;
    const Matrix p_inv = [&] {
      const auto e = orbitseq::exactla::row_reduce(p.hstack(Matrix::identity(n)));
      Matrix inv(n, n);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
      }
      return inv;
    }();
    ASSERT_EQ(p * p_inv, Matrix::identity(n));
    const Matrix m = p * d * p_inv;
    ASSERT_EQ(m * m, Matrix::identity(n));
    EXPECT_EQ(eigenspace_dim(m, 1) + eigenspace_dim(m, -1), n);
  }
}

TEST(Solve, FindsCoordinatesOrReportsInconsistency) {
  const Matrix a{{1, 0}, {0, 1}, {1, 1}};
  auto s = orbitseq::exactla::solve(a, Vector{2, 3, 5});
  ASSERT_TRUE(s.found);
  EXPECT_EQ(s.x, (Vector{2, 3}));
  EXPECT_FALSE(orbitseq::exactla::solve(a, Vector{2, 3, 4}).found);
}

TEST(RationalCanonicalForm, DenominatorPositiveAndReduced) {
  Rational q(6, -4);
  q.canonicalize();
  EXPECT_EQ(q.get_num(), -3);
  EXPECT_EQ(q.get_den(), 2);
  const Matrix m{{Rational(1, 3), Rational(2, 6)}};
  EXPECT_EQ(m(0, 1).get_den(), 3);
}

}  // namespace
