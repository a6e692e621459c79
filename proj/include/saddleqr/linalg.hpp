#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "saddleqr/matrix.hpp"

namespace saddleqr {

/// Result of an iterative norm estimate. When `converged` is false the value
/// is still a valid lower bound for the quantity being estimated.
struct NormEstimate {
  double value = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

inline constexpr double default_norm_tol = 1e-8;

/// Default iteration cap for a matrix whose larger dimension is `dim`.
[[nodiscard]] constexpr std::size_t default_max_iter(std::size_t dim) noexcept {
  return 5 * dim + 100;
}

/// Largest singular value by power iteration on X^T X, applied as
/// x -> X^T (X x). Starts from the normalized all-ones vector and falls back
/// to unit vectors when that start has (nearly) no component in the row space.
/// `max_iter == 0` selects default_max_iter.
[[nodiscard]] NormEstimate spectral_norm(const DenseMatrix& x, double tol = default_norm_tol,
                                         std::size_t max_iter = 0);

/// Smallest singular value of a square matrix by inverse iteration on
/// (M^T M)^{-1}, using a Householder factorization of M for the solves.
/// Throws ErrorCode::singular if M is singular to working precision.
[[nodiscard]] NormEstimate smallest_singular_value(const DenseMatrix& m,
                                                   double tol = default_norm_tol,
                                                   std::size_t max_iter = 0);

/// kappa_2(M) = sigma_max / sigma_min; `converged` is the conjunction of
/// both iterations and `iterations` their sum.
[[nodiscard]] NormEstimate condition_number(const DenseMatrix& m, double tol = default_norm_tol);

/// kappa_2 of a tall l x k matrix (l >= k) as kappa_2(R) of its Householder
/// R factor; equal to condition_number for square input.
[[nodiscard]] NormEstimate condition_number_tall(const DenseMatrix& x,
                                                 double tol = default_norm_tol);

/// Solves R z = g for square upper-triangular R. Row i accumulates
/// sum_j R(i,j) z(j) with j descending from n-1 to i+1.
[[nodiscard]] Vector back_substitute(const DenseMatrix& r, const Vector& g);

/// Solves R^T y = b (forward substitution on the transpose).
[[nodiscard]] Vector forward_substitute_transposed(const DenseMatrix& r, const Vector& b);

struct CholeskyResult {
  /// Lower-triangular factor, present only on success.
  std::optional<DenseMatrix> factor;
  /// 1-based index of the first nonpositive pivot; 0 on success.
  std::size_t failed_pivot = 0;
  /// Smallest pivot value seen (the failing one, if any).
  double min_pivot = 0.0;

  [[nodiscard]] bool ok() const noexcept { return factor.has_value(); }
};

/// A = L L^T. A nonpositive pivot is reported in the result, not thrown.
/// Throws ErrorCode::domain if A is not square or not symmetric within
/// 10 eps ||A|| entrywise.
[[nodiscard]] CholeskyResult cholesky(const DenseMatrix& a);

/// Whether |A(i,j) - A(j,i)| <= tol for all i, j.
[[nodiscard]] bool is_symmetric(const DenseMatrix& a, double tol);

struct SymmetricEigen {
  std::vector<double> values;  ///< ascending
  DenseMatrix vectors;         ///< column i pairs with values[i]
};

/// Dense cyclic Jacobi eigensolver for small symmetric matrices. Used as the
/// exact reference next to the iterative estimators; cost is O(n^3) per sweep.
[[nodiscard]] SymmetricEigen symmetric_eigen(const DenseMatrix& a);

/// Singular values (descending) of X via Jacobi on X^T X.
[[nodiscard]] std::vector<double> singular_values_exact(const DenseMatrix& x);

}  // namespace saddleqr
