#include "saddleqr/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace saddleqr {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::dimension_mismatch: return "dimension";
    case ErrorCode::singular: return "singular";
    case ErrorCode::rank_deficient: return "rank";
    case ErrorCode::domain: return "domain";
    case ErrorCode::hypothesis_violated: return "hypothesis";
    case ErrorCode::degenerate_solution: return "degenerate";
    case ErrorCode::parse: return "parse";
    case ErrorCode::io: return "io";
  }
  return "unknown";
}

namespace {

[[noreturn]] void shape_error(const char* op, const DenseMatrix& a, const DenseMatrix& b) {
  throw Error(ErrorCode::dimension_mismatch, std::string(op) + ": incompatible shapes " +
                                                 a.shape_string() + " and " + b.shape_string());
}

}  // namespace

// ---------------------------------------------------------------- Vector

double Vector::norm2() const noexcept {
  double s = 0.0;
  for (double v : data_) s += v * v;
  return std::sqrt(s);
}

bool Vector::all_finite() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](double v) { return std::isfinite(v); });
}

double dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::dimension_mismatch, "dot: vector lengths " + std::to_string(a.size()) +
                                                   " and " + std::to_string(b.size()));
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::dimension_mismatch, "vector subtraction: lengths differ");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::dimension_mismatch, "vector addition: lengths differ");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vector operator*(double s, const Vector& a) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
  return out;
}

// ----------------------------------------------------------- DenseMatrix

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_)
    throw Error(ErrorCode::dimension_mismatch,
                "DenseMatrix: data length " + std::to_string(data_.size()) +
                    " does not match shape " + shape_string());
}

DenseMatrix DenseMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  const std::size_t nr = rows.size();
  const std::size_t nc = nr == 0 ? 0 : rows.begin()->size();
  std::vector<double> data;
  data.reserve(nr * nc);
  for (const auto& r : rows) {
    if (r.size() != nc)
      throw Error(ErrorCode::dimension_mismatch, "DenseMatrix::from_rows: ragged rows");
    data.insert(data.end(), r.begin(), r.end());
  }
  return DenseMatrix(nr, nc, std::move(data));
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1.0;
  return out;
}

DenseMatrix DenseMatrix::diagonal(std::span<const double> diag) {
  DenseMatrix out(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) out(i, i) = diag[i];
  return out;
}

DenseMatrix DenseMatrix::column(const Vector& v) {
  return DenseMatrix(v.size(), 1, std::vector<double>(v.values().begin(), v.values().end()));
}

DenseMatrix DenseMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                               std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_)
    throw Error(ErrorCode::dimension_mismatch, "block: range exceeds " + shape_string());
  DenseMatrix out(nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    const auto src = row(r0 + i).subspan(c0, nc);
    std::copy(src.begin(), src.end(), out.row(i).begin());
  }
  return out;
}

void DenseMatrix::set_block(std::size_t r0, std::size_t c0, const DenseMatrix& src) {
  if (r0 + src.rows() > rows_ || c0 + src.cols() > cols_)
    throw Error(ErrorCode::dimension_mismatch,
                "set_block: " + src.shape_string() + " does not fit in " + shape_string());
  for (std::size_t i = 0; i < src.rows(); ++i) {
    const auto s = src.row(i);
    std::copy(s.begin(), s.end(), row(r0 + i).begin() + static_cast<std::ptrdiff_t>(c0));
  }
}

Vector DenseMatrix::column_vector(std::size_t j) const {
  Vector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

bool DenseMatrix::all_finite() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](double v) { return std::isfinite(v); });
}

double DenseMatrix::frobenius_norm() const noexcept {
  double s = 0.0;
  for (double v : data_) s += v * v;
  return std::sqrt(s);
}

double DenseMatrix::max_abs() const noexcept {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

std::string DenseMatrix::shape_string() const {
  return std::to_string(rows_) + "x" + std::to_string(cols_);
}

// ------------------------------------------------------------ products

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) shape_error("matmul", a, b);
  DenseMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto crow = c.row(i);
    const auto arow = a.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = arow[k];
      const auto brow = b.row(k);
      for (std::size_t j = 0; j < crow.size(); ++j) crow[j] += aik * brow[j];
    }
  }
  return c;
}

DenseMatrix matmul_tn(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows()) shape_error("matmul_tn", a, b);
  DenseMatrix c(a.cols(), b.cols());
  for (std::size_t k = 0; k < a.rows(); ++k) {
    const auto arow = a.row(k);
    const auto brow = b.row(k);
    for (std::size_t i = 0; i < a.cols(); ++i) {
      const double aki = arow[i];
      auto crow = c.row(i);
      for (std::size_t j = 0; j < brow.size(); ++j) crow[j] += aki * brow[j];
    }
  }
  return c;
}

Vector matvec(const DenseMatrix& a, const Vector& x) {
  if (a.cols() != x.size())
    throw Error(ErrorCode::dimension_mismatch, "matvec: matrix " + a.shape_string() +
                                                   " and vector of length " +
                                                   std::to_string(x.size()));
  Vector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto arow = a.row(i);
    double s = 0.0;
    for (std::size_t k = 0; k < arow.size(); ++k) s += arow[k] * x[k];
    y[i] = s;
  }
  return y;
}

Vector matvec_t(const DenseMatrix& a, const Vector& x) {
  if (a.rows() != x.size())
    throw Error(ErrorCode::dimension_mismatch, "matvec_t: matrix " + a.shape_string() +
                                                   " and vector of length " +
                                                   std::to_string(x.size()));
  Vector y(a.cols());
  auto out = y.values();
  for (std::size_t k = 0; k < a.rows(); ++k) {
    const auto arow = a.row(k);
    const double xk = x[k];
    for (std::size_t j = 0; j < arow.size(); ++j) out[j] += arow[j] * xk;
  }
  return y;
}

DenseMatrix transpose(const DenseMatrix& a) {
  DenseMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) shape_error("matrix addition", a, b);
  DenseMatrix c = a;
  auto cv = c.values();
  const auto bv = b.values();
  for (std::size_t i = 0; i < cv.size(); ++i) cv[i] += bv[i];
  return c;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) shape_error("matrix subtraction", a, b);
  DenseMatrix c = a;
  auto cv = c.values();
  const auto bv = b.values();
  for (std::size_t i = 0; i < cv.size(); ++i) cv[i] -= bv[i];
  return c;
}

DenseMatrix operator*(double s, const DenseMatrix& a) {
  DenseMatrix c = a;
  for (double& v : c.values()) v *= s;
  return c;
}

DenseMatrix hcat(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows()) shape_error("hcat", a, b);
  DenseMatrix c(a.rows(), a.cols() + b.cols());
  c.set_block(0, 0, a);
  c.set_block(0, a.cols(), b);
  return c;
}

DenseMatrix vcat(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.cols()) shape_error("vcat", a, b);
  DenseMatrix c(a.rows() + b.rows(), a.cols());
  c.set_block(0, 0, a);
  c.set_block(a.rows(), 0, b);
  return c;
}

}  // namespace saddleqr
