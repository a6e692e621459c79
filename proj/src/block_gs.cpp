#include "saddleqr/block_gs.hpp"

#include "saddleqr/householder.hpp"

namespace saddleqr {

namespace {

ThinQR panel_qr(const DenseMatrix& x, const char* step) {
  try {
    return thin_householder_qr(x);
  } catch (const Error& e) {
    throw Error(e.code(), std::string(step) + ": " + e.what());
  }
}

// Y = X - Q S, i.e. the projection residual of a panel.
DenseMatrix project_out(const DenseMatrix& x, const DenseMatrix& q, const DenseMatrix& s) {
  return x - matmul(q, s);
}

}  // namespace

BlockPartition::BlockPartition(DenseMatrix m1, DenseMatrix m2)
    : m1_(std::move(m1)), m2_(std::move(m2)) {
  const std::size_t l = m1_.cols() + m2_.cols();
  if (m1_.rows() != l || m2_.rows() != l)
    throw Error(ErrorCode::dimension_mismatch,
                "BlockPartition: panels " + m1_.shape_string() + " and " + m2_.shape_string() +
                    " do not form a square matrix");
}

BlockPartition BlockPartition::split(const DenseMatrix& full, std::size_t m) {
  if (!full.is_square() || m > full.cols())
    throw Error(ErrorCode::dimension_mismatch,
                "BlockPartition::split: cannot split " + full.shape_string() + " after column " +
                    std::to_string(m));
  return {full.block(0, 0, full.rows(), m), full.block(0, m, full.rows(), full.cols() - m)};
}

DenseMatrix BlockQR::r() const {
  const std::size_t m = r1.rows();
  const std::size_t n = r2.rows();
  DenseMatrix out(m + n, m + n);
  out.set_block(0, 0, r1);
  out.set_block(0, m, s);
  out.set_block(m, m, r2);
  return out;
}

BlockQR bcgs(const BlockPartition& p) {
  ThinQR first = panel_qr(p.m1(), "first panel");
  DenseMatrix s = matmul_tn(first.q, p.m2());
  const DenseMatrix y = project_out(p.m2(), first.q, s);
  ThinQR second = panel_qr(y, "second panel");
  return {std::move(first.q), std::move(second.q), std::move(first.r), std::move(s),
          std::move(second.r), std::nullopt};
}

BlockQR bcgs2(const BlockPartition& p) {
  ThinQR first = panel_qr(p.m1(), "first panel");
  DenseMatrix s1 = matmul_tn(first.q, p.m2());
  const DenseMatrix y1 = project_out(p.m2(), first.q, s1);
  ThinQR second = panel_qr(y1, "second panel");

  DenseMatrix s2 = matmul_tn(first.q, second.q);
  const DenseMatrix y2 = project_out(second.q, first.q, s2);
  ThinQR third = panel_qr(y2, "reorthogonalization panel");

  DenseMatrix s = s1 + matmul(s2, second.r);
  DenseMatrix r2 = matmul(third.r, second.r);
  for (std::size_t i = 0; i < r2.rows(); ++i) {
    if (!(r2(i, i) > 0.0))
      throw Error(ErrorCode::domain, "reorthogonalization panel: combined R2 diagonal entry " +
                                         std::to_string(i + 1) + " is not positive");
  }

  ReorthDiagnostics diag{std::move(s1), std::move(s2), second.r, third.r};
  return {std::move(first.q), std::move(third.q), std::move(first.r), std::move(s),
          std::move(r2), std::move(diag)};
}

}  // namespace saddleqr
