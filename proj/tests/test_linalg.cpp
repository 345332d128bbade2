#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "centrafactor/centrality.hpp"
#include "centrafactor/linalg.hpp"
#include "oracles.hpp"

using namespace centrafactor;

TEST(Standardize, ColumnOneTwoThree) {
  const Matrix z = standardize_columns(Matrix::from_rows({{1}, {2}, {3}}));
  const double k = std::sqrt(1.5);
  EXPECT_NEAR(z(0, 0), -k, 1e-12);
  EXPECT_NEAR(z(1, 0), 0.0, 1e-12);
  EXPECT_NEAR(z(2, 0), k, 1e-12);
}

TEST(Standardize, Idempotent) {
  std::mt19937_64 rng(1);
  const Matrix z = standardize_columns(oracle::random_matrix(rng, 40, 4));
  EXPECT_LE(max_abs_diff(standardize_columns(z), z), 1e-12);
}

TEST(Standardize, MeanZeroUnitSd) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix z = standardize_columns(oracle::random_matrix(rng, 5 + trial, 4, -50, 300));
    for (std::size_t c = 0; c < 4; ++c) {
      const auto col = z.column(c);
      EXPECT_LE(std::abs(mean(col)), 1e-12);
      EXPECT_LE(std::abs(std::sqrt(population_variance(col)) - 1.0), 1e-12);
    }
  }
}

TEST(Standardize, ConstantColumnNamesTheMetric) {
  const Matrix m = Matrix::from_rows({{1, 2}, {2, 2}, {3, 2}});
  const std::vector<std::string> names{"deg", "evc"};
  try {
    standardize_columns(m, names);
    FAIL() << "expected DegenerateColumn";
  } catch (const DegenerateColumn& e) {
    EXPECT_EQ(e.column(), 1u);
    EXPECT_EQ(e.name(), "evc");
  }
}

TEST(Correlation, IdenticalColumnsGiveAllOnes) {
  Matrix d(6, 4);
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 4; ++c) d(r, c) = static_cast<double>(r * r);
  const Matrix r = correlation_matrix(d);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_NEAR(r(i, j), 1.0, 1e-12);
}

TEST(Correlation, OrthogonalColumnsGiveIdentity) {
  // Centered, mutually orthogonal ±1 patterns.
  const Matrix d = Matrix::from_rows({{1, 1, 1, 1},
                                      {1, 1, -1, -1},
                                      {1, -1, 1, -1},
                                      {1, -1, -1, 1},
                                      {-1, 1, 1, -1},
                                      {-1, 1, -1, 1},
                                      {-1, -1, 1, 1},
                                      {-1, -1, -1, -1}});
  EXPECT_LE(max_abs_diff(correlation_matrix(d), Matrix::identity(4)), 1e-12);
}

TEST(Correlation, PathDatasetMatchesPairwisePearson) {
  const auto d = centrality_dataset(parse_edge_list("1 2\n2 3\n3 4\n4 5").graph);
  const Matrix r = correlation_matrix(d.values);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      EXPECT_NEAR(r(i, j), oracle::pearson(d.values.column(i), d.values.column(j)), 1e-12);
}

TEST(Correlation, InvariantUnderPositiveAffineRescaling) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> scale(0.01, 100.0), shift(-1000.0, 1000.0);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix d = oracle::random_matrix(rng, 30, 4);
    Matrix e = d;
    for (std::size_t c = 0; c < 4; ++c) {
      const double a = scale(rng), b = shift(rng);
      for (std::size_t r = 0; r < 30; ++r) e(r, c) = a * d(r, c) + b;
    }
    EXPECT_LE(max_abs_diff(correlation_matrix(d), correlation_matrix(e)), 1e-12);
  }
}

TEST(Correlation, InvariantsOnRandomData) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    const Matrix r = correlation_matrix(oracle::random_matrix(rng, 8 + trial % 30, 4));
    for (std::size_t i = 0; i < 4; ++i) {
      EXPECT_EQ(r(i, i), 1.0);
      for (std::size_t j = 0; j < 4; ++j) {
        EXPECT_EQ(r(i, j), r(j, i));
        EXPECT_LE(std::abs(r(i, j)), 1.0);
      }
    }
    const auto e = jacobi_eigen(r);
    EXPECT_GE(e.eigenvalues.back(), -1e-9);
    EXPECT_NEAR(std::accumulate(e.eigenvalues.begin(), e.eigenvalues.end(), 0.0), 4.0, 1e-9);
  }
}

TEST(Jacobi, Identity) {
  const auto e = jacobi_eigen(Matrix::identity(4));
  EXPECT_EQ(e.eigenvalues, (std::vector<double>{1, 1, 1, 1}));
  EXPECT_EQ(e.eigenvectors, Matrix::identity(4));
}

TEST(Jacobi, DiagonalSortedDescending) {
  const auto e = jacobi_eigen(Matrix::from_rows({{1, 0}, {0, 3}}));
  EXPECT_EQ(e.eigenvalues, (std::vector<double>{3, 1}));
  EXPECT_EQ(e.eigenvectors, Matrix::from_rows({{0, 1}, {1, 0}}));
}

TEST(Jacobi, TwoByTwoClosedForm) {
  // [[2,1],[1,2]]: eigenvalues 3 and 1, eigenvectors (1,1)/√2, (1,-1)/√2.
  const auto e = jacobi_eigen(Matrix::from_rows({{2, 1}, {1, 2}}));
  EXPECT_NEAR(e.eigenvalues[0], 3.0, 1e-14);
  EXPECT_NEAR(e.eigenvalues[1], 1.0, 1e-14);
  const double h = std::sqrt(0.5);
  EXPECT_NEAR(e.eigenvectors(0, 0), h, 1e-14);
  EXPECT_NEAR(e.eigenvectors(1, 0), h, 1e-14);
  // Largest-magnitude entry positive, ties to the lowest index.
  EXPECT_NEAR(e.eigenvectors(0, 1), h, 1e-14);
  EXPECT_NEAR(e.eigenvectors(1, 1), -h, 1e-14);
}

TEST(Jacobi, ReconstructionAndOrthonormality) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    const Matrix a = oracle::random_symmetric(rng, 4);
    const auto e = jacobi_eigen(a);
    EXPECT_LE(max_abs_diff(reconstruct(e), a), 1e-10);
    const Matrix& v = e.eigenvectors;
    EXPECT_LE(max_abs_diff(v.transpose() * v, Matrix::identity(4)), 1e-12);
    EXPECT_NEAR(std::accumulate(e.eigenvalues.begin(), e.eigenvalues.end(), 0.0), trace(a), 1e-9);
    for (std::size_t j = 0; j + 1 < 4; ++j) EXPECT_GE(e.eigenvalues[j], e.eigenvalues[j + 1]);
    for (std::size_t j = 0; j < 4; ++j) {
      // A v = λ v
      for (std::size_t i = 0; i < 4; ++i) {
        double av = 0.0;
        for (std::size_t k = 0; k < 4; ++k) av += a(i, k) * v(k, j);
        EXPECT_NEAR(av, e.eigenvalues[j] * v(i, j), 1e-9);
      }
    }
  }
}

TEST(Jacobi, InvariantUnderSymmetricPermutation) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Matrix a = oracle::random_symmetric(rng, 4);
    std::vector<std::size_t> perm{0, 1, 2, 3};
    std::shuffle(perm.begin(), perm.end(), rng);
    Matrix b(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) b(i, j) = a(perm[i], perm[j]);
    const auto ea = jacobi_eigen(a);
    const auto eb = jacobi_eigen(b);
    for (std::size_t j = 0; j < 4; ++j) {
      EXPECT_NEAR(ea.eigenvalues[j], eb.eigenvalues[j], 1e-12);
      for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(eb.eigenvectors(i, j), ea.eigenvectors(perm[i], j), 1e-9);
    }
  }
}

TEST(Jacobi, LargerAdjacencyMatrices) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 5; ++trial) {
    const auto g = oracle::random_connected_graph(rng, 40, 50);
    const Matrix a = oracle::adjacency_matrix(g);
    const auto e = jacobi_eigen(a);
    EXPECT_LE(max_abs_diff(reconstruct(e), a), 1e-10);
  }
}

TEST(Jacobi, RejectsNonSymmetricInput) {
  EXPECT_THROW(jacobi_eigen(Matrix::from_rows({{1, 2}, {0, 1}})), ContractViolation);
  EXPECT_THROW(jacobi_eigen(Matrix(2, 3)), ContractViolation);
}

TEST(Jacobi, SweepLimitRaisesNumericalError) {
  std::mt19937_64 rng(3);
  EXPECT_THROW(jacobi_eigen(oracle::random_symmetric(rng, 6), 1e-12, 1), NumericalError);
}
