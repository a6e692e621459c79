#pragma once

#include <string_view>

#include "saddleqr/matrix.hpp"

namespace saddleqr {

/// Blocks of the symmetric saddle-point matrix [[A, B], [B^T, -C]].
struct SaddleBlocks {
  DenseMatrix a;  ///< m x m, symmetric positive definite
  DenseMatrix b;  ///< m x n, full column rank
  DenseMatrix c;  ///< n x n, symmetric positive semidefinite

  [[nodiscard]] std::size_t m() const noexcept { return a.rows(); }
  [[nodiscard]] std::size_t n() const noexcept { return c.rows(); }
  /// Throws ErrorCode::dimension_mismatch naming the offending pair.
  void check_dimensions() const;
};

enum class SolveMethod { bcgs, bcgs2, householder };

[[nodiscard]] std::string_view to_string(SolveMethod method) noexcept;
/// Throws ErrorCode::domain for an unknown name.
[[nodiscard]] SolveMethod parse_method(std::string_view name);

/// The (m+n) x (m+n) matrix [[A, B], [B^T, -C]].
[[nodiscard]] DenseMatrix assemble(const SaddleBlocks& blocks);

struct SaddleValidation {
  bool a_spd = false;
  bool c_psd = false;
  bool b_full_rank = false;
  double a_min_pivot = 0.0;      ///< smallest Cholesky pivot of A (failing pivot if any)
  double c_min_eigenvalue = 0.0; ///< power-iteration estimate of lambda_min(C)
  double b_min_r_diag = 0.0;     ///< smallest |R(i,i)| of B's thin QR (0 if rank error)

  [[nodiscard]] bool ok() const noexcept { return a_spd && c_psd && b_full_rank; }
};

/// Structural certificates for the saddle blocks. Failures are reported in
/// the result; only inconsistent dimensions throw.
[[nodiscard]] SaddleValidation validate(const SaddleBlocks& blocks);

/// Factorization used by a solve, exposed for metric computation.
struct Factorization {
  DenseMatrix q;
  DenseMatrix r;
};

struct SaddleSolution {
  Vector z;  ///< (x; y)
  Vector x;  ///< first m entries
  Vector y;  ///< last n entries
  SolveMethod method = SolveMethod::bcgs2;
};

/// Factorizes M = Q R by the requested path: bcgs/bcgs2 over the (M1, M2)
/// column panels, householder on the whole matrix.
[[nodiscard]] Factorization factorize(const DenseMatrix& m, std::size_t m_split, SolveMethod method);

/// z = R^{-1} (Q^T f).
[[nodiscard]] Vector solve_factored(const Factorization& qr, const Vector& f);

/// Assembles M, factorizes it, solves R z = Q^T f and splits z = (x; y).
[[nodiscard]] SaddleSolution solve(const SaddleBlocks& blocks, const Vector& f, SolveMethod method);

}  // namespace saddleqr
