#include "saddleqr/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "saddleqr/householder.hpp"

namespace saddleqr {

namespace {

Vector normalized(Vector v) {
  const double n = v.norm2();
  for (double& x : v.values()) x /= n;
  return v;
}

// Power iteration on adj(fwd(.)), a symmetric positive semidefinite operator.
// Returns sqrt of the converged Rayleigh quotient, i.e. ||fwd||_2. A non-finite
// iterate is returned as value = +inf so callers can classify it.
template <class Forward, class Adjoint>
NormEstimate power_iterate(Vector x, Forward fwd, Adjoint adj, double tol, std::size_t max_iter) {
  double lambda_prev = 0.0;
  double lambda = 0.0;
  for (std::size_t it = 1; it <= max_iter; ++it) {
    const Vector y = fwd(x);
    lambda = dot(y, y);
    Vector w = adj(y);
    const double nw = w.norm2();
    if (!std::isfinite(lambda) || !std::isfinite(nw))
      return {std::numeric_limits<double>::infinity(), it, false};
    if (nw == 0.0) return {std::sqrt(lambda), it, true};
    if (it > 1 && std::abs(lambda - lambda_prev) <= tol * lambda)
      return {std::sqrt(lambda), it, true};
    for (double& v : w.values()) v /= nw;
    x = std::move(w);
    lambda_prev = lambda;
  }
  return {std::sqrt(lambda), max_iter, false};
}

}  // namespace

NormEstimate spectral_norm(const DenseMatrix& x, double tol, std::size_t max_iter) {
  if (!(tol > 0.0)) throw Error(ErrorCode::domain, "spectral_norm: tol must be positive");
  const std::size_t n = x.cols();
  const double frob = x.frobenius_norm();
  if (n == 0 || x.rows() == 0 || frob == 0.0) return {0.0, 0, true};
  if (max_iter == 0) max_iter = default_max_iter(std::max(x.rows(), x.cols()));

  // All-ones start; if it is (nearly) annihilated by X, it carries no usable
  // component of the dominant right singular vector, so try e_1, e_2, ...
  const double floor = std::sqrt(machine_eps) * frob;
  Vector start = normalized(Vector(n, 1.0));
  if (matvec(x, start).norm2() <= floor) {
    for (std::size_t j = 0; j < n; ++j) {
      Vector e(n, 0.0);
      e[j] = 1.0;
      if (matvec(x, e).norm2() > floor) {
        start = std::move(e);
        break;
      }
    }
  }
  return power_iterate(
      std::move(start), [&](const Vector& v) { return matvec(x, v); },
      [&](const Vector& v) { return matvec_t(x, v); }, tol, max_iter);
}

NormEstimate smallest_singular_value(const DenseMatrix& m, double tol, std::size_t max_iter) {
  if (!m.is_square())
    throw Error(ErrorCode::dimension_mismatch, "smallest_singular_value: matrix " +
                                                   m.shape_string() + " is not square");
  if (!(tol > 0.0))
    throw Error(ErrorCode::domain, "smallest_singular_value: tol must be positive");
  const std::size_t n = m.rows();
  if (max_iter == 0) max_iter = default_max_iter(n);

  HouseholderFactors f = [&] {
    try {
      return householder_factor(m);
    } catch (const Error& e) {
      throw Error(ErrorCode::singular, std::string("singular-to-working-precision: ") + e.what());
    }
  }();
  // Only a pivot that vanishes far below any representable conditioning is
  // treated as exact singularity; ill-conditioned inputs keep their estimate.
  const double norm = spectral_norm(m, tol).value;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(std::abs(f.r(i, i)) > machine_eps * machine_eps * norm))
      throw Error(ErrorCode::singular, "singular-to-working-precision: pivot " +
                                           std::to_string(i + 1) + " of the QR factor vanishes");
  }

  // (M^T M)^{-1} = M^{-1} M^{-T}, with M = Q R: M^{-T} v = Q R^{-T} v and
  // M^{-1} v = R^{-1} Q^T v.
  auto inv_t = [&](const Vector& v) {
    Vector y = forward_substitute_transposed(f.r, v);
    apply_q(f, y.values());
    return y;
  };
  auto inv = [&](const Vector& v) {
    Vector y = v;
    apply_qt(f, y.values());
    return back_substitute(f.r, y);
  };
  const NormEstimate inv_norm =
      power_iterate(normalized(Vector(n, 1.0)), inv_t, inv, tol, max_iter);
  if (!std::isfinite(inv_norm.value) || inv_norm.value == 0.0)
    throw Error(ErrorCode::singular, "singular-to-working-precision: inverse iteration diverged");
  return {1.0 / inv_norm.value, inv_norm.iterations, inv_norm.converged};
}

NormEstimate condition_number(const DenseMatrix& m, double tol) {
  if (!m.is_square())
    throw Error(ErrorCode::dimension_mismatch,
                "condition_number: matrix " + m.shape_string() + " is not square");
  const NormEstimate hi = spectral_norm(m, tol);
  if (hi.value == 0.0) throw Error(ErrorCode::singular, "singular-to-working-precision: zero matrix");
  const NormEstimate lo = smallest_singular_value(m, tol);
  return {hi.value / lo.value, hi.iterations + lo.iterations, hi.converged && lo.converged};
}

NormEstimate condition_number_tall(const DenseMatrix& x, double tol) {
  if (x.is_square()) return condition_number(x, tol);
  if (x.rows() < x.cols())
    throw Error(ErrorCode::dimension_mismatch,
                "condition_number_tall: matrix " + x.shape_string() + " is wide");
  try {
    return condition_number(householder_factor(x).r, tol);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::rank_deficient) throw;
    throw Error(ErrorCode::singular, std::string("singular-to-working-precision: ") + e.what());
  }
}

Vector back_substitute(const DenseMatrix& r, const Vector& g) {
  const std::size_t n = r.rows();
  if (!r.is_square() || g.size() != n)
    throw Error(ErrorCode::dimension_mismatch, "back_substitute: matrix " + r.shape_string() +
                                                   " with right-hand side of length " +
                                                   std::to_string(g.size()));
  Vector z(n);
  for (std::size_t i = n; i-- > 0;) {
    const double d = r(i, i);
    if (!std::isnormal(d))
      throw Error(ErrorCode::singular,
                  "back_substitute: zero diagonal entry in row " + std::to_string(i + 1));
    double s = 0.0;
    for (std::size_t j = n; j-- > i + 1;) s += r(i, j) * z[j];
    z[i] = (g[i] - s) / d;
  }
  return z;
}

Vector forward_substitute_transposed(const DenseMatrix& r, const Vector& b) {
  const std::size_t n = r.rows();
  if (!r.is_square() || b.size() != n)
    throw Error(ErrorCode::dimension_mismatch, "forward_substitute_transposed: matrix " +
                                                   r.shape_string() + " with vector of length " +
                                                   std::to_string(b.size()));
  // R^T is lower triangular; accumulate column-wise over R's rows.
  Vector y = b;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = r(i, i);
    if (!std::isnormal(d))
      throw Error(ErrorCode::singular, "forward_substitute_transposed: zero diagonal entry in row " +
                                           std::to_string(i + 1));
    y[i] /= d;
    const auto rrow = r.row(i);
    for (std::size_t j = i + 1; j < n; ++j) y[j] -= rrow[j] * y[i];
  }
  return y;
}

bool is_symmetric(const DenseMatrix& a, double tol) {
  if (!a.is_square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      if (!(std::abs(a(i, j) - a(j, i)) <= tol)) return false;
  return true;
}

CholeskyResult cholesky(const DenseMatrix& a) {
  if (!a.is_square())
    throw Error(ErrorCode::domain, "cholesky: matrix " + a.shape_string() + " is not square");
  const double tol = 10.0 * machine_eps * spectral_norm(a).value;
  if (!is_symmetric(a, tol)) throw Error(ErrorCode::domain, "cholesky: matrix is not symmetric");

  const std::size_t n = a.rows();
  DenseMatrix l(n, n);
  CholeskyResult out;
  out.min_pivot = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < n; ++j) {
    double d = a(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    out.min_pivot = std::min(out.min_pivot, d);
    if (!(d > 0.0)) {
      out.failed_pivot = j + 1;
      return out;
    }
    const double ljj = std::sqrt(d);
    l(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = a(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / ljj;
    }
  }
  out.factor = std::move(l);
  return out;
}

SymmetricEigen symmetric_eigen(const DenseMatrix& input) {
  if (!input.is_square())
    throw Error(ErrorCode::dimension_mismatch,
                "symmetric_eigen: matrix " + input.shape_string() + " is not square");
  const std::size_t n = input.rows();
  DenseMatrix a = input;
  DenseMatrix v = DenseMatrix::identity(n);

  auto rotate = [](DenseMatrix& m, std::size_t p, std::size_t q, double c, double s, bool rows) {
    for (std::size_t k = 0; k < m.rows(); ++k) {
      double& xp = rows ? m(p, k) : m(k, p);
      double& xq = rows ? m(q, k) : m(k, q);
      const double tp = xp;
      const double tq = xq;
      xp = c * tp - s * tq;
      xq = s * tp + c * tq;
    }
  };

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::abs(a(p, q));
    if (off == 0.0) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double g = 100.0 * std::abs(apq);
        // Rutishauser: drop entries already negligible against both pivots.
        if (sweep > 3 && std::abs(a(p, p)) + g == std::abs(a(p, p)) &&
            std::abs(a(q, q)) + g == std::abs(a(q, q))) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;
        // A <- J^T A J; J's (p, q) columns are (c, -s) and (s, c).
        rotate(a, p, q, c, s, false);
        rotate(a, p, q, c, s, true);
        rotate(v, p, q, c, s, false);
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });
  SymmetricEigen out{std::vector<double>(n), DenseMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

std::vector<double> singular_values_exact(const DenseMatrix& x) {
  const SymmetricEigen e = symmetric_eigen(matmul_tn(x, x));
  std::vector<double> sv(e.values.size());
  for (std::size_t i = 0; i < sv.size(); ++i)
    sv[i] = std::sqrt(std::max(e.values[sv.size() - 1 - i], 0.0));
  return sv;
}

}  // namespace saddleqr
