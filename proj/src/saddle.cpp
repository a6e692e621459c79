#include "saddleqr/saddle.hpp"

#include <algorithm>
#include <cmath>

#include "saddleqr/block_gs.hpp"
#include "saddleqr/householder.hpp"
#include "saddleqr/linalg.hpp"

namespace saddleqr {

void SaddleBlocks::check_dimensions() const {
  auto fail = [](const char* what, const DenseMatrix& x, const DenseMatrix& y) {
    throw Error(ErrorCode::dimension_mismatch, std::string("saddle blocks: ") + what + " (" +
                                                   x.shape_string() + " vs " + y.shape_string() +
                                                   ")");
  };
  if (!a.is_square()) fail("A must be square", a, a);
  if (!c.is_square()) fail("C must be square", c, c);
  if (b.rows() != a.rows()) fail("A and B row counts differ", a, b);
  if (b.cols() != c.rows()) fail("B column count must match C", b, c);
}

std::string_view to_string(SolveMethod method) noexcept {
  switch (method) {
    case SolveMethod::bcgs: return "bcgs";
    case SolveMethod::bcgs2: return "bcgs2";
    case SolveMethod::householder: return "householder";
  }
  return "unknown";
}

SolveMethod parse_method(std::string_view name) {
  if (name == "bcgs") return SolveMethod::bcgs;
  if (name == "bcgs2") return SolveMethod::bcgs2;
  if (name == "householder") return SolveMethod::householder;
  throw Error(ErrorCode::domain, "unknown method '" + std::string(name) + "'");
}

DenseMatrix assemble(const SaddleBlocks& blocks) {
  blocks.check_dimensions();
  const std::size_t m = blocks.m();
  const std::size_t n = blocks.n();
  DenseMatrix out(m + n, m + n);
  out.set_block(0, 0, blocks.a);
  out.set_block(0, m, blocks.b);
  out.set_block(m, 0, transpose(blocks.b));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(m + i, m + j) = -blocks.c(i, j);
  return out;
}

SaddleValidation validate(const SaddleBlocks& blocks) {
  blocks.check_dimensions();
  SaddleValidation report;

  const double a_tol = 10.0 * machine_eps * spectral_norm(blocks.a).value;
  if (is_symmetric(blocks.a, a_tol)) {
    const CholeskyResult chol = cholesky(blocks.a);
    report.a_spd = chol.ok();
    report.a_min_pivot = chol.min_pivot;
  }

  // lambda_min(C) = ||C|| - lambda_max(||C|| I - C); the shifted matrix is
  // PSD, so its spectral norm is its top eigenvalue.
  const double c_norm = spectral_norm(blocks.c).value;
  if (is_symmetric(blocks.c, 10.0 * machine_eps * c_norm)) {
    DenseMatrix shifted = -1.0 * blocks.c;
    for (std::size_t i = 0; i < shifted.rows(); ++i) shifted(i, i) += c_norm;
    report.c_min_eigenvalue = c_norm - spectral_norm(shifted).value;
    report.c_psd = report.c_min_eigenvalue >= -1e2 * machine_eps * c_norm;
  } else {
    report.c_min_eigenvalue = std::numeric_limits<double>::quiet_NaN();
  }

  if (blocks.b.cols() <= blocks.b.rows()) {
    try {
      const ThinQR qr = thin_householder_qr(blocks.b);
      double min_diag = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < qr.r.rows(); ++i) min_diag = std::min(min_diag, qr.r(i, i));
      report.b_min_r_diag = min_diag;
      report.b_full_rank = true;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::rank_deficient) throw;
    }
  }
  return report;
}

Factorization factorize(const DenseMatrix& m, std::size_t m_split, SolveMethod method) {
  switch (method) {
    case SolveMethod::bcgs:
    case SolveMethod::bcgs2: {
      const BlockPartition p = BlockPartition::split(m, m_split);
      const BlockQR f = method == SolveMethod::bcgs ? bcgs(p) : bcgs2(p);
      return {f.q(), f.r()};
    }
    case SolveMethod::householder: {
      ThinQR f = thin_householder_qr(m);
      return {std::move(f.q), std::move(f.r)};
    }
  }
  throw Error(ErrorCode::domain, "factorize: unknown method");
}

Vector solve_factored(const Factorization& qr, const Vector& f) {
  return back_substitute(qr.r, matvec_t(qr.q, f));
}

SaddleSolution solve(const SaddleBlocks& blocks, const Vector& f, SolveMethod method) {
  const DenseMatrix m = assemble(blocks);
  if (f.size() != m.rows())
    throw Error(ErrorCode::dimension_mismatch, "solve: right-hand side has length " +
                                                   std::to_string(f.size()) + ", expected " +
                                                   std::to_string(m.rows()));
  const Factorization qr = factorize(m, blocks.m(), method);
  SaddleSolution out;
  out.z = solve_factored(qr, f);
  const auto zv = out.z.values();
  out.x = Vector(std::vector<double>(zv.begin(), zv.begin() + static_cast<std::ptrdiff_t>(blocks.m())));
  out.y = Vector(std::vector<double>(zv.begin() + static_cast<std::ptrdiff_t>(blocks.m()), zv.end()));
  out.method = method;
  return out;
}

}  // namespace saddleqr
