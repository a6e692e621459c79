#include "saddleqr/testgen.hpp"

#include <cmath>
#include <numbers>

#include "saddleqr/householder.hpp"

namespace saddleqr::testgen {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t k) noexcept {
  return splitmix64(seed ^ splitmix64(k));
}

double NormalStream::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double NormalStream::next() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

std::string_view to_string(Kind kind) noexcept {
  switch (kind) {
    case Kind::matrix1: return "matrix1";
    case Kind::matrix2: return "matrix2";
    case Kind::hilbert: return "hilbert";
    case Kind::ones_rank_one: return "ones_rank_one";
  }
  return "unknown";
}

Kind parse_kind(std::string_view name) {
  if (name == "matrix1") return Kind::matrix1;
  if (name == "matrix2") return Kind::matrix2;
  if (name == "hilbert") return Kind::hilbert;
  if (name == "ones_rank_one") return Kind::ones_rank_one;
  throw Error(ErrorCode::domain, "unknown generator kind '" + std::string(name) + "'");
}

DenseMatrix logspace_diag(double s, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::domain, "logspace_diag: n must be >= 1");
  if (!(s >= 0.0)) throw Error(ErrorCode::domain, "logspace_diag: s must be >= 0");
  DenseMatrix d(n, n);
  if (n == 1) {
    d(0, 0) = std::pow(10.0, -s);
    return d;
  }
  const double denom = static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = std::pow(10.0, -s * static_cast<double>(i) / denom);
  return d;
}

namespace {

// First `cols` columns of an rows x rows Gaussian, drawn column by column.
DenseMatrix gaussian_columns(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  NormalStream stream(seed);
  DenseMatrix g(rows, cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i) g(i, j) = stream.next();
  return g;
}

// Leading `cols` columns of random_orthogonal(rows, seed). Householder step j
// only reads columns <= j of the Gaussian and Q's column j only depends on
// reflectors 0..j, so this equals slicing the full matrix bit for bit.
DenseMatrix orthogonal_columns(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  return thin_householder_qr(gaussian_columns(rows, cols, seed)).q;
}

void require_finite(const DenseMatrix& x, const char* what) {
  if (!x.all_finite()) throw Error(ErrorCode::domain, std::string(what) + ": non-finite entry");
}

}  // namespace

DenseMatrix random_orthogonal(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw Error(ErrorCode::domain, "random_orthogonal: n must be >= 1");
  return orthogonal_columns(n, n, seed);
}

DenseMatrix matrix1(std::size_t m, std::size_t n, double s, std::uint64_t seed) {
  if (n == 0 || m < n)
    throw Error(ErrorCode::dimension_mismatch, "matrix1 needs m >= n >= 1, got m = " +
                                                   std::to_string(m) + ", n = " + std::to_string(n));
  const DenseMatrix p = orthogonal_columns(m, n, sub_seed(seed, 1));
  const DenseMatrix qf = random_orthogonal(n, sub_seed(seed, 2));
  DenseMatrix x = matmul(matmul(p, logspace_diag(s, n)), transpose(qf));
  require_finite(x, "matrix1");
  return x;
}

DenseMatrix matrix2(std::size_t n, double s, std::uint64_t seed) {
  const DenseMatrix p = random_orthogonal(n, seed);
  const DenseMatrix x = matmul(matmul(p, logspace_diag(s, n)), transpose(p));
  DenseMatrix sym(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sym(i, j) = (x(i, j) + x(j, i)) / 2.0;
  require_finite(sym, "matrix2");
  return sym;
}

DenseMatrix hilbert(std::size_t m) {
  if (m == 0) throw Error(ErrorCode::domain, "hilbert: m must be >= 1");
  DenseMatrix h(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) h(i, j) = 1.0 / static_cast<double>(i + j + 1);
  return h;
}

DenseMatrix ones_rank_one(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::domain, "ones_rank_one: n must be >= 1");
  return DenseMatrix(n, n, 1.0);
}

DenseMatrix generate(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case Kind::matrix1: return matrix1(spec.m, spec.n, spec.s, spec.seed);
    case Kind::matrix2:
      if (spec.n == 0) throw Error(ErrorCode::domain, "matrix2: n must be >= 1");
      return matrix2(spec.n, spec.s, spec.seed);
    case Kind::hilbert: return hilbert(spec.n);
    case Kind::ones_rank_one: return ones_rank_one(spec.n);
  }
  throw Error(ErrorCode::domain, "generate: unknown kind");
}

ScaledProblem scale_problem(const DenseMatrix& a1, const DenseMatrix& b1, const DenseMatrix& c1,
                            double t) {
  if (t == 0.0 || !std::isfinite(t))
    throw Error(ErrorCode::domain, "scale_problem: t must be finite and nonzero");
  ScaledProblem p;
  p.t = t;
  p.blocks.a = a1;
  for (double& v : p.blocks.a.values()) v /= t;
  p.blocks.b = t * b1;
  p.blocks.c = t * c1;
  p.blocks.check_dimensions();

  const std::size_t m = p.blocks.m();
  const std::size_t n = p.blocks.n();
  p.z_star = Vector(m + n);
  for (std::size_t i = 0; i < m; ++i) p.z_star[i] = t;
  for (std::size_t i = 0; i < n; ++i) p.z_star[m + i] = 1.0 / t;
  p.f = matvec(assemble(p.blocks), p.z_star);
  return p;
}

}  // namespace saddleqr::testgen
