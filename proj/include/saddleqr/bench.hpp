#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "saddleqr/saddle.hpp"
#include "saddleqr/stability.hpp"
#include "saddleqr/testgen.hpp"

namespace saddleqr::bench {

/// Test families: 1 = Hilbert A, matrix1 B, rank-one C; 2, 3 and custom =
/// matrix2 A, matrix1 B, matrix2 C (2 and 3 differ only in default sizes).
enum class Example { one, two, three, custom };
enum class Format { csv, md };

[[nodiscard]] std::string_view to_string(Example e) noexcept;
[[nodiscard]] Example parse_example(std::string_view name);
[[nodiscard]] Format parse_format(std::string_view name);

struct BenchConfig {
  Example example = Example::one;
  std::size_t m = 12;
  std::size_t n = 6;
  double s_a = 10.0;  ///< ignored by example 1
  double s_b = 10.0;
  double s_c = 10.0;  ///< ignored by example 1
  std::vector<double> t_list{0.01, 0.1, 1.0, 10.0, 100.0};
  std::uint64_t seed = 0;
  std::vector<SolveMethod> methods{SolveMethod::bcgs, SolveMethod::bcgs2};
  Format format = Format::csv;

  /// Throws ErrorCode::domain on an empty or zero t, no methods, or bad sizes.
  void check() const;
};

/// Reference sizes: 12/6 (example 1), 1000/500 (2), 3000/100 (3), and
/// a small well-conditioned 20/10, s = 2 family for custom runs.
[[nodiscard]] BenchConfig default_config(Example e);

/// Unscaled blocks (A1, B1, C1) of a configuration. The matrices depend on
/// (seed, example) only, so every t in a sweep scales the same base data.
[[nodiscard]] SaddleBlocks base_blocks(const BenchConfig& cfg);

/// The scaled problem for one t.
[[nodiscard]] testgen::ScaledProblem build_problem(const BenchConfig& cfg, double t);

/// Cell outcome: either metrics or the code of the error that stopped it.
struct MethodResult {
  SolveMethod method = SolveMethod::bcgs2;
  std::optional<StabilityReport> report;
  std::string error;  ///< ErrorCode name when report is empty
};

struct BenchRow {
  double t = 1.0;
  std::optional<double> kappa;
  std::string kappa_error;
  std::vector<MethodResult> methods;
};

struct BenchResult {
  BenchConfig config;
  std::vector<BenchRow> rows;

  /// True when every cell produced a value.
  [[nodiscard]] bool complete() const noexcept;
};

/// Runs one t of the sweep with every configured method.
[[nodiscard]] BenchRow run_row(const BenchConfig& cfg, const SaddleBlocks& base, double t);
[[nodiscard]] BenchResult run(const BenchConfig& cfg);

/// Columns: t, kappa_M, then orth_<method>, dec_<method>, res_<method>,
/// stab_<method> for each requested method in bcgs, bcgs2, householder
/// order. Numbers have 17 significant digits; failed cells read ERR:<code>.
void write_csv(std::ostream& out, const BenchResult& result);
/// Table with t as columns and kappa(M) plus each metric/method as rows.
/// kappa values >= 1e14 are prefixed with '~' (precision-limited).
void write_markdown(std::ostream& out, const BenchResult& result);
void write(std::ostream& out, const BenchResult& result);

/// Canonically ordered, de-duplicated method list.
[[nodiscard]] std::vector<SolveMethod> ordered_methods(const std::vector<SolveMethod>& methods);

}  // namespace saddleqr::bench
