#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "saddleqr/matrix.hpp"
#include "saddleqr/saddle.hpp"

namespace saddleqr::testgen {

/// SplitMix64 finalizer; the integer hash behind sub-seed derivation.
[[nodiscard]] std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Child seed number `k` of `seed`: splitmix64(seed ^ splitmix64(k)).
[[nodiscard]] std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t k) noexcept;

/// Standard normal deviates from std::mt19937_64 via the Box-Muller
/// transform, uniforms taken from the top 53 bits. Fully specified, so a
/// seed yields the same stream with any conforming standard library.
class NormalStream {
 public:
  explicit NormalStream(std::uint64_t seed) : engine_(seed) {}
  double next();

 private:
  double uniform();  // [0, 1)

  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

enum class Kind { matrix1, matrix2, hilbert, ones_rank_one };

[[nodiscard]] std::string_view to_string(Kind kind) noexcept;
/// Throws ErrorCode::domain for an unknown name.
[[nodiscard]] Kind parse_kind(std::string_view name);

struct GeneratorSpec {
  Kind kind = Kind::matrix1;
  std::size_t m = 0;  ///< rows (matrix1 only)
  std::size_t n = 0;  ///< columns, or order of square kinds
  double s = 0.0;     ///< decades between largest and smallest singular value
  std::uint64_t seed = 0;
};

/// diag(10^(-s (i-1)/(n-1))), i = 1..n; for n = 1 the single entry is 10^-s.
[[nodiscard]] DenseMatrix logspace_diag(double s, std::size_t n);

/// n x n Gaussian (filled column by column) orthogonalized by positive-
/// diagonal thin Householder QR.
[[nodiscard]] DenseMatrix random_orthogonal(std::size_t n, std::uint64_t seed);

/// X = P D Qf^T with P the first n columns of random_orthogonal(m, sub_seed(seed, 1)),
/// Qf = random_orthogonal(n, sub_seed(seed, 2)), D = logspace_diag(s, n).
[[nodiscard]] DenseMatrix matrix1(std::size_t m, std::size_t n, double s, std::uint64_t seed);

/// Symmetrized P D P^T with P = random_orthogonal(n, seed).
[[nodiscard]] DenseMatrix matrix2(std::size_t n, double s, std::uint64_t seed);

/// h(i,j) = 1 / (i + j - 1), 1-based.
[[nodiscard]] DenseMatrix hilbert(std::size_t m);

/// e e^T with e the all-ones vector of length n.
[[nodiscard]] DenseMatrix ones_rank_one(std::size_t n);

/// Dispatches on spec.kind; validates the spec's dimensions.
[[nodiscard]] DenseMatrix generate(const GeneratorSpec& spec);

/// Saddle problem after scaling A = A1/t, B = B1 t, C = C1 t, with the
/// constructed solution z* = (t 1_m; 1_n / t) and f = M z* (stored).
struct ScaledProblem {
  SaddleBlocks blocks;
  double t = 1.0;
  Vector z_star;
  Vector f;
};

/// Throws ErrorCode::domain if t == 0 and ErrorCode::dimension_mismatch for
/// inconsistent blocks.
[[nodiscard]] ScaledProblem scale_problem(const DenseMatrix& a1, const DenseMatrix& b1,
                                          const DenseMatrix& c1, double t);

}  // namespace saddleqr::testgen
