#pragma once

#include <cstddef>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "saddleqr/error.hpp"

namespace saddleqr {

/// Unit roundoff used in every metric (IEEE binary64 epsilon, ~2.2e-16).
inline constexpr double machine_eps = std::numeric_limits<double>::epsilon();

class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t len, double fill = 0.0) : data_(len, fill) {}
  explicit Vector(std::vector<double> data) : data_(std::move(data)) {}
  Vector(std::initializer_list<double> values) : data_(values) {}

  [[nodiscard]] std::size_t size() const noexcept { return data_.size(); }
  [[nodiscard]] double operator[](std::size_t i) const { return data_[i]; }
  [[nodiscard]] double& operator[](std::size_t i) { return data_[i]; }

  [[nodiscard]] std::span<const double> values() const noexcept { return data_; }
  [[nodiscard]] std::span<double> values() noexcept { return data_; }

  /// Euclidean norm, summed in index order.
  [[nodiscard]] double norm2() const noexcept;
  [[nodiscard]] bool all_finite() const noexcept;

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<double> data_;
};

[[nodiscard]] double dot(const Vector& a, const Vector& b);
[[nodiscard]] Vector operator-(const Vector& a, const Vector& b);
[[nodiscard]] Vector operator+(const Vector& a, const Vector& b);
[[nodiscard]] Vector operator*(double s, const Vector& a);

/// Row-major dense real matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  /// Takes ownership of row-major `data`; its length must be rows*cols.
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> data);

  /// Builds from nested row lists; all rows must have equal length.
  static DenseMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
  static DenseMatrix identity(std::size_t n);
  static DenseMatrix diagonal(std::span<const double> diag);
  /// Column vector view of `v` as an len x 1 matrix.
  static DenseMatrix column(const Vector& v);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

  [[nodiscard]] double operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  [[nodiscard]] double& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }

  [[nodiscard]] std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  [[nodiscard]] std::span<double> row(std::size_t i) {
    return {data_.data() + i * cols_, cols_};
  }
  [[nodiscard]] std::span<const double> values() const noexcept { return data_; }
  [[nodiscard]] std::span<double> values() noexcept { return data_; }

  /// Copy of the nr x nc block starting at (r0, c0).
  [[nodiscard]] DenseMatrix block(std::size_t r0, std::size_t c0, std::size_t nr,
                                  std::size_t nc) const;
  /// Overwrites the block at (r0, c0) with `src`.
  void set_block(std::size_t r0, std::size_t c0, const DenseMatrix& src);
  [[nodiscard]] Vector column_vector(std::size_t j) const;

  [[nodiscard]] bool all_finite() const noexcept;
  [[nodiscard]] double frobenius_norm() const noexcept;
  [[nodiscard]] double max_abs() const noexcept;
  [[nodiscard]] std::string shape_string() const;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// A*B. Every output entry accumulates over the inner index in ascending
/// order, so the result is bitwise identical to the textbook triple loop.
[[nodiscard]] DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
/// A^T*B without forming A^T; same summation order as matmul(transpose(A), B).
[[nodiscard]] DenseMatrix matmul_tn(const DenseMatrix& a, const DenseMatrix& b);
[[nodiscard]] Vector matvec(const DenseMatrix& a, const Vector& x);
/// A^T*x.
[[nodiscard]] Vector matvec_t(const DenseMatrix& a, const Vector& x);
[[nodiscard]] DenseMatrix transpose(const DenseMatrix& a);

[[nodiscard]] DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
[[nodiscard]] DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
[[nodiscard]] DenseMatrix operator*(double s, const DenseMatrix& a);

/// Horizontal concatenation (A, B).
[[nodiscard]] DenseMatrix hcat(const DenseMatrix& a, const DenseMatrix& b);
/// Vertical concatenation (A; B).
[[nodiscard]] DenseMatrix vcat(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace saddleqr
