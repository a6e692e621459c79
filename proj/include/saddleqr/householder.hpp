#pragma once

#include <optional>
#include <vector>

#include "saddleqr/matrix.hpp"

namespace saddleqr {

/// Thin QR factorization X = Q R with Q left orthogonal (l x k) and R
/// upper triangular (k x k) with a positive diagonal.
struct ThinQR {
  DenseMatrix q;
  DenseMatrix r;
};

/// Compact Householder representation of X (l x k, l >= k):
/// H_j = I - tau_j v_j v_j^T with v_j stored in column j of `reflectors`
/// (rows j..l-1, leading entry 1). `r` is the raw triangular factor, before
/// any sign normalization, so X = H_0 H_1 ... H_{k-1} [r; 0].
struct HouseholderFactors {
  DenseMatrix reflectors;
  std::vector<double> tau;
  DenseMatrix r;

  [[nodiscard]] std::size_t rows() const noexcept { return reflectors.rows(); }
  [[nodiscard]] std::size_t cols() const noexcept { return reflectors.cols(); }
};

/// Reduces X column by column with v = x + sign(x_1) ||x|| e_1 (sign(0) = +1).
/// A column whose remaining norm is <= `rank_threshold` raises
/// ErrorCode::rank_deficient naming that (1-based) column. Without a
/// threshold only an exactly zero column is rejected.
[[nodiscard]] HouseholderFactors householder_factor(const DenseMatrix& x,
                                                    std::optional<double> rank_threshold = {});

/// Explicit thin Q (l x k) by applying H_{k-1}, ..., H_0 to the first k
/// columns of the identity.
[[nodiscard]] DenseMatrix form_q(const HouseholderFactors& f);

/// Explicit thin Q by accumulating the full product H_0 H_1 ... H_{k-1} as an
/// l x l matrix and keeping its first k columns. Independent of form_q's
/// ordering; used to cross-check it.
[[nodiscard]] DenseMatrix form_q_accumulated(const HouseholderFactors& f);

/// y <- Q_full^T y, where Q_full = H_0 ... H_{k-1} is l x l.
void apply_qt(const HouseholderFactors& f, std::span<double> y);
/// y <- Q_full y.
void apply_q(const HouseholderFactors& f, std::span<double> y);

/// Positive-diagonal thin Householder QR. Throws ErrorCode::dimension_mismatch
/// when l < k and ErrorCode::rank_deficient when a pivot norm falls to
/// eps * sqrt(l) * ||X||_2 or below.
[[nodiscard]] ThinQR thin_householder_qr(const DenseMatrix& x);

/// Flips signs so that diag(R) > 0: row i of R and column i of Q are negated
/// together whenever R(i,i) < 0.
void normalize_signs(DenseMatrix& q, DenseMatrix& r);

struct QrResiduals {
  double orth = 0.0;  ///< ||I - Q^T Q||_2 / eps
  double dec = 0.0;   ///< ||X - Q R||_2 / (eps ||X||_2)
};

[[nodiscard]] QrResiduals qr_residuals(const DenseMatrix& x, const ThinQR& f);

/// ||I - Q^T Q||_2 (not scaled by eps).
[[nodiscard]] double orthogonality_defect(const DenseMatrix& q);

}  // namespace saddleqr
