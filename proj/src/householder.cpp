#include "saddleqr/householder.hpp"

#include <cmath>

#include "saddleqr/linalg.hpp"

namespace saddleqr {

namespace {

// Tolerance for the ||X|| that scales the rank threshold; the threshold only
// needs the right order of magnitude.
constexpr double rank_norm_tol = 1e-6;

// Applies H = I - tau v v^T (v stored in column j of `refl`, rows j..) to
// columns [c0, c1) of `y`, touching rows j.. only.
void apply_reflector_left(const DenseMatrix& refl, std::size_t j, double tau, DenseMatrix& y,
                          std::size_t c0, std::size_t c1) {
  if (c0 >= c1) return;
  std::vector<double> w(c1 - c0, 0.0);
  for (std::size_t i = j; i < y.rows(); ++i) {
    const double vi = refl(i, j);
    const auto yrow = y.row(i);
    for (std::size_t c = c0; c < c1; ++c) w[c - c0] += vi * yrow[c];
  }
  for (std::size_t i = j; i < y.rows(); ++i) {
    const double tv = tau * refl(i, j);
    auto yrow = y.row(i);
    for (std::size_t c = c0; c < c1; ++c) yrow[c] -= tv * w[c - c0];
  }
}

void apply_reflector_vec(const DenseMatrix& refl, std::size_t j, double tau, std::span<double> y) {
  double s = 0.0;
  for (std::size_t i = j; i < y.size(); ++i) s += refl(i, j) * y[i];
  const double ts = tau * s;
  for (std::size_t i = j; i < y.size(); ++i) y[i] -= ts * refl(i, j);
}

}  // namespace

HouseholderFactors householder_factor(const DenseMatrix& x, std::optional<double> rank_threshold) {
  const std::size_t l = x.rows();
  const std::size_t k = x.cols();
  if (l < k)
    throw Error(ErrorCode::dimension_mismatch,
                "householder QR needs rows >= cols, got " + x.shape_string());

  DenseMatrix work = x;
  HouseholderFactors f{DenseMatrix(l, k), std::vector<double>(k, 0.0), DenseMatrix(k, k)};
  const double threshold = rank_threshold.value_or(0.0);

  for (std::size_t j = 0; j < k; ++j) {
    double ss = 0.0;
    for (std::size_t i = j; i < l; ++i) ss += work(i, j) * work(i, j);
    const double normx = std::sqrt(ss);
    if (!(normx > threshold))
      throw Error(ErrorCode::rank_deficient, "rank-deficient at column " + std::to_string(j + 1));

    const double x0 = work(j, j);
    const double sign = x0 < 0.0 ? -1.0 : 1.0;
    const double beta = -sign * normx;
    const double denom = x0 - beta;
    f.tau[j] = (beta - x0) / beta;
    f.reflectors(j, j) = 1.0;
    for (std::size_t i = j + 1; i < l; ++i) f.reflectors(i, j) = work(i, j) / denom;

    apply_reflector_left(f.reflectors, j, f.tau[j], work, j + 1, k);
    work(j, j) = beta;
    for (std::size_t i = j + 1; i < l; ++i) work(i, j) = 0.0;
  }

  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) f.r(i, j) = work(i, j);
  return f;
}

DenseMatrix form_q(const HouseholderFactors& f) {
  const std::size_t l = f.rows();
  const std::size_t k = f.cols();
  DenseMatrix q(l, k);
  for (std::size_t i = 0; i < k; ++i) q(i, i) = 1.0;
  for (std::size_t jj = k; jj-- > 0;) apply_reflector_left(f.reflectors, jj, f.tau[jj], q, jj, k);
  return q;
}

DenseMatrix form_q_accumulated(const HouseholderFactors& f) {
  const std::size_t l = f.rows();
  const std::size_t k = f.cols();
  DenseMatrix full = DenseMatrix::identity(l);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < l; ++i) {
      auto row = full.row(i);
      double s = 0.0;
      for (std::size_t c = j; c < l; ++c) s += row[c] * f.reflectors(c, j);
      const double ts = f.tau[j] * s;
      for (std::size_t c = j; c < l; ++c) row[c] -= ts * f.reflectors(c, j);
    }
  }
  return full.block(0, 0, l, k);
}

void apply_qt(const HouseholderFactors& f, std::span<double> y) {
  if (y.size() != f.rows())
    throw Error(ErrorCode::dimension_mismatch, "apply_qt: vector length mismatch");
  for (std::size_t j = 0; j < f.cols(); ++j) apply_reflector_vec(f.reflectors, j, f.tau[j], y);
}

void apply_q(const HouseholderFactors& f, std::span<double> y) {
  if (y.size() != f.rows())
    throw Error(ErrorCode::dimension_mismatch, "apply_q: vector length mismatch");
  for (std::size_t j = f.cols(); j-- > 0;) apply_reflector_vec(f.reflectors, j, f.tau[j], y);
}

void normalize_signs(DenseMatrix& q, DenseMatrix& r) {
  for (std::size_t i = 0; i < r.rows(); ++i) {
    if (!(r(i, i) < 0.0)) continue;
    for (double& v : r.row(i)) v = -v;
    for (std::size_t row = 0; row < q.rows(); ++row) q(row, i) = -q(row, i);
  }
}

ThinQR thin_householder_qr(const DenseMatrix& x) {
  if (x.rows() < x.cols())
    throw Error(ErrorCode::dimension_mismatch,
                "thin QR needs rows >= cols, got " + x.shape_string());
  const double norm = spectral_norm(x, rank_norm_tol).value;
  const double threshold = machine_eps * std::sqrt(static_cast<double>(x.rows())) * norm;
  const HouseholderFactors f = householder_factor(x, threshold);
  ThinQR out{form_q(f), f.r};
  normalize_signs(out.q, out.r);
  return out;
}

double orthogonality_defect(const DenseMatrix& q) {
  DenseMatrix f = matmul_tn(q, q);
  for (double& v : f.values()) v = -v;
  for (std::size_t i = 0; i < f.rows(); ++i) f(i, i) += 1.0;
  return spectral_norm(f).value;
}

QrResiduals qr_residuals(const DenseMatrix& x, const ThinQR& f) {
  QrResiduals out;
  out.orth = orthogonality_defect(f.q) / machine_eps;
  const double err = spectral_norm(x - matmul(f.q, f.r)).value;
  const double norm = spectral_norm(x).value;
  out.dec = err == 0.0 ? 0.0 : err / (machine_eps * norm);
  return out;
}

}  // namespace saddleqr
