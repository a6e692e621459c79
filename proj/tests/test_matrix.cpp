#include <gtest/gtest.h>

#include "saddleqr/matrix.hpp"
#include "test_support.hpp"

using namespace saddleqr;

TEST(Matrix, IdentityTimesX) {
  const DenseMatrix x = DenseMatrix::from_rows({{1.5, -2.0}, {0.25, 7.0}});
  EXPECT_EQ(matmul(DenseMatrix::identity(2), x), x);
}

TEST(Matrix, HandProduct) {
  const DenseMatrix a = DenseMatrix::from_rows({{1, 2}, {3, 4}});
  const DenseMatrix b = DenseMatrix::from_rows({{1}, {1}});
  EXPECT_EQ(matmul(a, b), DenseMatrix::from_rows({{3}, {7}}));
}

TEST(Matrix, MatmulBitwiseMatchesTripleLoop) {
  const DenseMatrix a = test::random_matrix(5, 4, 11);
  const DenseMatrix b = test::random_matrix(4, 3, 12);
  EXPECT_EQ(matmul(a, b), test::naive_matmul(a, b));
  EXPECT_EQ(matmul_tn(transpose(a), b.block(0, 0, 4, 3)), test::naive_matmul(a, b));
}

TEST(Matrix, MatmulDimensionErrorNamesShapes) {
  try {
    (void)matmul(DenseMatrix(2, 3), DenseMatrix(2, 3));
    FAIL() << "expected dimension error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::dimension_mismatch);
    EXPECT_NE(std::string(e.what()).find("2x3"), std::string::npos);
  }
}

TEST(Matrix, Transpose) {
  EXPECT_EQ(transpose(DenseMatrix::from_rows({{1, 2}, {3, 4}})),
            DenseMatrix::from_rows({{1, 3}, {2, 4}}));
  const DenseMatrix s = DenseMatrix::from_rows({{1, 5}, {5, 2}});
  EXPECT_EQ(transpose(s), s);
  const DenseMatrix x = test::random_matrix(4, 7, 3);
  EXPECT_EQ(transpose(transpose(x)), x);
}

TEST(Matrix, TransposeOfProductProperty) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const std::size_t r = 1 + seed % 6, k = 2 + seed % 5, c = 1 + (seed * 7) % 5;
    const DenseMatrix a = test::random_matrix(r, k, seed);
    const DenseMatrix b = test::random_matrix(k, c, seed + 100);
    const DenseMatrix lhs = transpose(matmul(a, b));
    const DenseMatrix rhs = matmul(transpose(b), transpose(a));
    EXPECT_LE(test::max_abs_diff(lhs, rhs),
              10 * machine_eps * a.frobenius_norm() * b.frobenius_norm());
  }
}

TEST(Matrix, BlocksAndConcatenation) {
  const DenseMatrix x = test::random_matrix(4, 5, 9);
  const DenseMatrix left = x.block(0, 0, 4, 2);
  const DenseMatrix right = x.block(0, 2, 4, 3);
  EXPECT_EQ(hcat(left, right), x);
  EXPECT_EQ(vcat(x.block(0, 0, 1, 5), x.block(1, 0, 3, 5)), x);
  EXPECT_THROW((void)x.block(3, 0, 2, 1), Error);
}

TEST(Matrix, ConstructorRejectsWrongLength) {
  EXPECT_THROW(DenseMatrix(2, 2, std::vector<double>{1.0, 2.0, 3.0}), Error);
}
