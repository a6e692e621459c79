#include "saddleqr/stability.hpp"

#include <algorithm>
#include <cmath>

#include "saddleqr/householder.hpp"

namespace saddleqr {

namespace {

DenseMatrix identity_minus(const DenseMatrix& g) {
  DenseMatrix f = -1.0 * g;
  for (std::size_t i = 0; i < f.rows(); ++i) f(i, i) += 1.0;
  return f;
}

constexpr std::size_t exact_lemma_limit = 64;

// I - Q^T Q (or I - Q Q^T when `outer`), accumulated in long double so the
// defect is resolved well below eps even when it is tiny; the exact
// route compares quantities that agree to within rounding of this matrix.
DenseMatrix gram_defect(const DenseMatrix& q, bool outer) {
  const std::size_t n = q.rows();
  DenseMatrix e(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      long double s = i == j ? 1.0L : 0.0L;
      for (std::size_t k = 0; k < n; ++k)
        s -= outer ? static_cast<long double>(q(i, k)) * q(j, k)
                   : static_cast<long double>(q(k, i)) * q(k, j);
      e(i, j) = static_cast<double>(s);
    }
  return e;
}

}  // namespace

StabilityReport metrics_with_kappa(const DenseMatrix& m, double kappa, const DenseMatrix& q,
                                   const DenseMatrix& r, const Vector& f, const Vector& z_computed,
                                   const Vector& z_star, double tol) {
  const double z_norm = z_computed.norm2();
  if (z_norm == 0.0)
    throw Error(ErrorCode::degenerate_solution, "degenerate solution for metric normalization");

  const double m_norm = spectral_norm(m, tol).value;
  StabilityReport rep;
  rep.kappa = kappa;
  rep.orth = spectral_norm(identity_minus(matmul_tn(q, q)), tol).value / machine_eps;
  const double dec_abs = spectral_norm(m - matmul(q, r), tol).value;
  rep.dec = dec_abs == 0.0 ? 0.0 : dec_abs / (machine_eps * m_norm);
  const double res_abs = (matvec(m, z_computed) - f).norm2();
  rep.res = res_abs == 0.0 ? 0.0 : res_abs / (machine_eps * m_norm * z_norm);
  const double err_abs = (z_computed - z_star).norm2();
  rep.stab = err_abs == 0.0 ? 0.0 : err_abs / (machine_eps * kappa * z_norm);
  return rep;
}

StabilityReport metrics(const DenseMatrix& m, const DenseMatrix& q, const DenseMatrix& r,
                        const Vector& f, const Vector& z_computed, const Vector& z_star,
                        double tol) {
  if (z_computed.norm2() == 0.0)
    throw Error(ErrorCode::degenerate_solution, "degenerate solution for metric normalization");
  const double kappa = condition_number(m, tol).value;
  return metrics_with_kappa(m, kappa, q, r, f, z_computed, z_star, tol);
}

Lemma1Measurement lemma1_bounds(const DenseMatrix& qt) {
  if (!qt.is_square())
    throw Error(ErrorCode::dimension_mismatch,
                "lemma1_bounds: matrix " + qt.shape_string() + " is not square");
  Lemma1Measurement out;

  if (qt.rows() <= exact_lemma_limit) {
    // Eigenvalues of E = I - Q^T Q: ||Q||^2 = 1 - min(E), ||Q^{-1}||^2 = 1 / (1 - max(E)).
    const std::vector<double> ev = symmetric_eigen(gram_defect(qt, false)).values;
    const std::vector<double> ev_outer = symmetric_eigen(gram_defect(qt, true)).values;
    out.beta = std::max(std::abs(ev.front()), std::abs(ev.back()));
    if (!(out.beta < 1.0))
      throw Error(ErrorCode::hypothesis_violated,
                  "near-orthogonality hypothesis violated: ||I - Q^T Q|| = " + std::to_string(out.beta));
    out.norm_q = std::sqrt(1.0 - ev.front());
    out.norm_q_inv = 1.0 / std::sqrt(1.0 - ev.back());
    out.right_defect = std::max(std::abs(ev_outer.front()), std::abs(ev_outer.back()));
    return out;
  }

  const DenseMatrix gram = matmul_tn(qt, qt);
  const DenseMatrix outer = matmul(qt, transpose(qt));

  out.beta = spectral_norm(identity_minus(gram)).value;
  if (!(out.beta < 1.0))
    throw Error(ErrorCode::hypothesis_violated,
                "near-orthogonality hypothesis violated: ||I - Q^T Q|| = " + std::to_string(out.beta));
  out.norm_q = spectral_norm(qt).value;
  out.norm_q_inv = 1.0 / smallest_singular_value(qt).value;
  out.right_defect = spectral_norm(identity_minus(outer)).value;
  return out;
}

PerturbationBound theorem1_bound(double alpha, double beta, double gamma, double delta) {
  if (!(alpha >= 0.0) || !(beta >= 0.0) || !(gamma >= 0.0) || !(delta >= 0.0))
    throw Error(ErrorCode::domain, "theorem1_bound: inputs must be nonnegative");
  if (!(beta < 1.0)) throw Error(ErrorCode::domain, "theorem1_bound: beta must be < 1");
  PerturbationBound b{alpha, beta, gamma, delta, 0.0, 0.0};
  b.mu = alpha + gamma * (1.0 + alpha) * std::sqrt((1.0 + beta) / (1.0 - beta));
  b.nu = beta + delta * (1.0 + beta);
  return b;
}

BackwardCertificate backward_certificate(const DenseMatrix& m, const DenseMatrix& q,
                                         const DenseMatrix& r, const Vector& f,
                                         const Vector& z_computed, double tol) {
  BackwardCertificate cert;
  cert.norm_m = spectral_norm(m, tol).value;
  cert.norm_f = f.norm2();
  cert.norm_z = z_computed.norm2();
  cert.residual = (matvec(m, z_computed) - f).norm2();

  const double alpha = spectral_norm(m - matmul(q, r), tol).value / cert.norm_m;
  const double beta = spectral_norm(identity_minus(matmul_tn(q, q)), tol).value;
  const double solve_factor = machine_eps * static_cast<double>(m.rows());
  cert.bound = PerturbationBound{alpha, beta, solve_factor, solve_factor, 0.0, 0.0};
  if (!(beta < 1.0)) return cert;

  cert.kappa = condition_number(m, tol).value;
  cert.bound = theorem1_bound(alpha, beta, solve_factor, solve_factor);
  cert.hypotheses_hold = alpha * cert.kappa < 1.0;
  return cert;
}

}  // namespace saddleqr
