#pragma once

#include "saddleqr/linalg.hpp"
#include "saddleqr/matrix.hpp"

namespace saddleqr {

/// Error metrics of one solve, each in units of machine epsilon:
///   orth = ||I - Q^T Q|| / eps
///   dec  = ||M - Q R|| / (eps ||M||)
///   res  = ||M z - f|| / (eps ||M|| ||z||)
///   stab = ||z - z*|| / (eps kappa(M) ||z||)
/// Both res and stab normalize by the computed solution z.
struct StabilityReport {
  double kappa = 0.0;
  double orth = 0.0;
  double dec = 0.0;
  double res = 0.0;
  double stab = 0.0;
};

/// kappa(M) is estimated with condition_number at `tol`. Throws
/// ErrorCode::degenerate_solution if z_computed is zero.
[[nodiscard]] StabilityReport metrics(const DenseMatrix& m, const DenseMatrix& q,
                                      const DenseMatrix& r, const Vector& f,
                                      const Vector& z_computed, const Vector& z_star,
                                      double tol = default_norm_tol);

/// Same metrics with a precomputed kappa(M), for comparing several
/// factorizations of one matrix.
[[nodiscard]] StabilityReport metrics_with_kappa(const DenseMatrix& m, double kappa,
                                                 const DenseMatrix& q, const DenseMatrix& r,
                                                 const Vector& f, const Vector& z_computed,
                                                 const Vector& z_star,
                                                 double tol = default_norm_tol);

/// Quantities bounded by the near-orthogonality lemma for a square Qt with
/// ||I - Qt^T Qt|| = beta < 1: ||Qt|| <= sqrt(1+beta),
/// ||Qt^{-1}|| <= 1/sqrt(1-beta), ||I - Qt Qt^T|| <= beta.
struct Lemma1Measurement {
  double beta = 0.0;
  double norm_q = 0.0;
  double norm_q_inv = 0.0;
  double right_defect = 0.0;
};

/// Measures the four quantities. Up to dimension 64 they come from a dense
/// symmetric eigensolver on Qt^T Qt and Qt Qt^T; larger matrices use the
/// power and inverse iteration estimators. Throws
/// ErrorCode::hypothesis_violated when beta >= 1.
[[nodiscard]] Lemma1Measurement lemma1_bounds(const DenseMatrix& qt);

struct PerturbationBound {
  double alpha = 0.0;  ///< ||M - Q R|| / ||M||
  double beta = 0.0;   ///< ||I - Q^T Q||
  double gamma = 0.0;  ///< triangular-solve backward factor
  double delta = 0.0;  ///< Q-application backward factor
  double mu = 0.0;     ///< ||dM|| <= mu ||M||
  double nu = 0.0;     ///< ||df|| <= nu ||f||
};

/// Backward perturbation factors for (M + dM) z = f + df:
///   mu = alpha + gamma (1 + alpha) sqrt((1 + beta) / (1 - beta))
///   nu = beta + delta (1 + beta)
/// Throws ErrorCode::domain unless 0 <= beta < 1 and all inputs are >= 0.
[[nodiscard]] PerturbationBound theorem1_bound(double alpha, double beta, double gamma,
                                               double delta);

struct BackwardCertificate {
  PerturbationBound bound;
  double kappa = 0.0;
  double norm_m = 0.0;
  double norm_f = 0.0;
  double norm_z = 0.0;
  double residual = 0.0;  ///< ||M z - f||
  bool hypotheses_hold = false;

  /// mu ||M|| ||z|| + nu ||f||, the residual bound implied by the perturbation.
  [[nodiscard]] double residual_bound() const noexcept {
    return bound.mu * norm_m * norm_z + bound.nu * norm_f;
  }
};

/// Measures alpha and beta from (M, Q, R), takes gamma = delta = eps * l and
/// evaluates theorem1_bound. When beta >= 1 or alpha * kappa(M) >= 1 the
/// result has hypotheses_hold = false (mu/nu are left at zero if beta >= 1).
[[nodiscard]] BackwardCertificate backward_certificate(const DenseMatrix& m, const DenseMatrix& q,
                                                       const DenseMatrix& r, const Vector& f,
                                                       const Vector& z_computed,
                                                       double tol = default_norm_tol);

}  // namespace saddleqr
