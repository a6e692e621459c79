#pragma once

#include <optional>

#include "saddleqr/matrix.hpp"

namespace saddleqr {

/// Two-panel column partition M = (M1, M2) of an l x l matrix, l = m + n.
class BlockPartition {
 public:
  /// Throws ErrorCode::dimension_mismatch unless both panels have
  /// m1.cols() + m2.cols() rows.
  BlockPartition(DenseMatrix m1, DenseMatrix m2);
  /// Splits the columns of square `full` after the first `m`.
  static BlockPartition split(const DenseMatrix& full, std::size_t m);

  [[nodiscard]] const DenseMatrix& m1() const noexcept { return m1_; }
  [[nodiscard]] const DenseMatrix& m2() const noexcept { return m2_; }
  [[nodiscard]] std::size_t m() const noexcept { return m1_.cols(); }
  [[nodiscard]] std::size_t n() const noexcept { return m2_.cols(); }
  [[nodiscard]] std::size_t l() const noexcept { return m1_.rows(); }
  [[nodiscard]] DenseMatrix assembled() const { return hcat(m1_, m2_); }

 private:
  DenseMatrix m1_;
  DenseMatrix m2_;
};

/// Intermediates of the reorthogonalization pass.
struct ReorthDiagnostics {
  DenseMatrix s1;     ///< Q1^T M2
  DenseMatrix s2;     ///< Q1^T Q2 (first-pass Q2)
  DenseMatrix r2;     ///< first-pass R2
  DenseMatrix r2bar;  ///< R factor of Q2 - Q1 S2
};

/// Block QR M = (Q1, Q2) [[R1, S], [0, R2]].
struct BlockQR {
  DenseMatrix q1;  ///< l x m
  DenseMatrix q2;  ///< l x n
  DenseMatrix r1;  ///< m x m upper triangular
  DenseMatrix s;   ///< m x n
  DenseMatrix r2;  ///< n x n upper triangular
  std::optional<ReorthDiagnostics> diagnostics;

  [[nodiscard]] DenseMatrix q() const { return hcat(q1, q2); }
  /// l x l upper-triangular R; the lower-left block is exactly zero.
  [[nodiscard]] DenseMatrix r() const;
};

/// Block classical Gram-Schmidt: M1 = Q1 R1, S = Q1^T M2, Y = M2 - Q1 S,
/// Y = Q2 R2, each QR by positive-diagonal thin Householder. Rank errors are
/// rethrown with the panel name ("first panel" / "second panel").
[[nodiscard]] BlockQR bcgs(const BlockPartition& p);

/// BCGS followed by one reorthogonalization of Q2 against Q1:
/// S2 = Q1^T Q2, Y2 = Q2 - Q1 S2 = Q2new R2bar, S = S1 + S2 R2,
/// R2 = R2bar R2. The first-pass intermediates are kept in `diagnostics`.
/// Throws ErrorCode::domain if the combined R2 loses its positive diagonal.
[[nodiscard]] BlockQR bcgs2(const BlockPartition& p);

}  // namespace saddleqr
