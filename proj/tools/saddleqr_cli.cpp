// saddleqr: generate test matrices, solve saddle-point systems through block
// Gram-Schmidt QR, and run the stability benchmark tables.
//
// Exit codes: 0 success; 1 a computation failed (singular/rank errors, or a
// bench with ERR cells); 2 configuration, parse or I/O failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "saddleqr/bench.hpp"
#include "saddleqr/linalg.hpp"
#include "saddleqr/matrix_market.hpp"
#include "saddleqr/saddle.hpp"
#include "saddleqr/stability.hpp"
#include "saddleqr/testgen.hpp"

namespace sq = saddleqr;

namespace {

constexpr int exit_compute = 1;
constexpr int exit_config = 2;

int exit_code_for(const sq::Error& e) {
  switch (e.code()) {
    case sq::ErrorCode::singular:
    case sq::ErrorCode::rank_deficient:
    case sq::ErrorCode::hypothesis_violated:
    case sq::ErrorCode::degenerate_solution:
      return exit_compute;
    default:
      return exit_config;
  }
}

sq::Vector as_vector(const sq::DenseMatrix& a, const std::string& path) {
  if (a.cols() != 1)
    throw sq::Error(sq::ErrorCode::dimension_mismatch,
                    path + ": expected a single column, got " + a.shape_string());
  return a.column_vector(0);
}

struct GenArgs {
  std::string kind;
  std::size_t m = 0;
  std::size_t n = 0;
  double s = 0.0;
  std::uint64_t seed = 0;
  std::string out;
};

int run_gen(const GenArgs& args) {
  sq::testgen::GeneratorSpec spec;
  spec.kind = sq::testgen::parse_kind(args.kind);
  spec.s = args.s;
  spec.seed = args.seed;
  if (spec.kind == sq::testgen::Kind::matrix1) {
    spec.m = args.m;
    spec.n = args.n;
  } else {
    spec.n = args.n != 0 ? args.n : args.m;
  }
  const sq::DenseMatrix x = sq::testgen::generate(spec);
  sq::mm::write(args.out, x);

  try {
    const double kappa = sq::condition_number_tall(x).value;
    std::cout << "kappa " << sq::mm::format_double(kappa) << '\n';
  } catch (const sq::Error&) {
    std::cout << "kappa inf\n";
  }
  return 0;
}

struct SolveArgs {
  std::string a, b, c, f;
  std::string method = "bcgs2";
  std::string out;
  std::string z_star;
  std::string report;
};

int run_solve(const SolveArgs& args) {
  const sq::SolveMethod method = sq::parse_method(args.method);
  sq::SaddleBlocks blocks{sq::mm::read(args.a), sq::mm::read(args.b), sq::mm::read(args.c)};
  const sq::Vector f = as_vector(sq::mm::read(args.f), args.f);
  std::optional<sq::Vector> z_star;
  if (!args.z_star.empty()) z_star = as_vector(sq::mm::read(args.z_star), args.z_star);
  blocks.check_dimensions();

  const sq::DenseMatrix m = sq::assemble(blocks);
  if (f.size() != m.rows())
    throw sq::Error(sq::ErrorCode::dimension_mismatch,
                    "right-hand side " + args.f + " has length " + std::to_string(f.size()) +
                        ", system order is " + std::to_string(m.rows()));
  if (z_star && z_star->size() != m.rows())
    throw sq::Error(sq::ErrorCode::dimension_mismatch,
                    "reference solution " + args.z_star + " has length " +
                        std::to_string(z_star->size()) + ", system order is " +
                        std::to_string(m.rows()));

  const sq::Factorization qr = sq::factorize(m, blocks.m(), method);
  const sq::Vector z = sq::solve_factored(qr, f);

  if (args.out.empty())
    sq::mm::write(std::cout, sq::DenseMatrix::column(z));
  else
    sq::mm::write(args.out, sq::DenseMatrix::column(z));

  if (z_star) {
    const sq::StabilityReport rep = sq::metrics(m, qr.q, qr.r, f, z, *z_star);
    std::ostringstream row;
    row << "method,kappa_M,orth,dec,res,stab\n"
        << sq::to_string(method) << ',' << sq::mm::format_double(rep.kappa) << ','
        << sq::mm::format_double(rep.orth) << ',' << sq::mm::format_double(rep.dec) << ','
        << sq::mm::format_double(rep.res) << ',' << sq::mm::format_double(rep.stab) << '\n';
    if (args.report.empty()) {
      std::cerr << row.str();
    } else {
      std::ofstream rep_out(args.report);
      if (!rep_out) throw sq::Error(sq::ErrorCode::io, "cannot open " + args.report + " for writing");
      rep_out << row.str();
    }
  }
  return 0;
}

struct BenchArgs {
  std::string example = "1";
  std::optional<std::size_t> m, n;
  std::optional<double> s_a, s_b, s_c;
  std::vector<double> t_list;
  std::uint64_t seed = 0;
  std::vector<std::string> methods;
  std::string format = "csv";
  std::string out;
};

int run_bench(const BenchArgs& args) {
  sq::bench::BenchConfig cfg = sq::bench::default_config(sq::bench::parse_example(args.example));
  if (args.m) cfg.m = *args.m;
  if (args.n) cfg.n = *args.n;
  if (args.s_a) cfg.s_a = *args.s_a;
  if (args.s_b) cfg.s_b = *args.s_b;
  if (args.s_c) cfg.s_c = *args.s_c;
  if (!args.t_list.empty()) cfg.t_list = args.t_list;
  cfg.seed = args.seed;
  if (!args.methods.empty()) {
    cfg.methods.clear();
    for (const auto& name : args.methods) cfg.methods.push_back(sq::parse_method(name));
  }
  cfg.format = sq::bench::parse_format(args.format);
  cfg.check();

  std::ofstream file;
  if (!args.out.empty()) {
    file.open(args.out);
    if (!file) throw sq::Error(sq::ErrorCode::io, "cannot open " + args.out + " for writing");
  }
  const sq::bench::BenchResult result = sq::bench::run(cfg);
  sq::bench::write(args.out.empty() ? std::cout : file, result);
  return result.complete() ? 0 : exit_compute;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Saddle-point solves by block Gram-Schmidt QR, with stability metrics"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a generated test matrix in Matrix Market format");
  gen_cmd->add_option("--kind", gen.kind, "matrix1 | matrix2 | hilbert | ones_rank_one")
      ->required();
  gen_cmd->add_option("--m", gen.m, "Rows (matrix1), or order of square kinds");
  gen_cmd->add_option("--n", gen.n, "Columns (matrix1), or order of square kinds");
  gen_cmd->add_option("--s", gen.s, "Decades of singular-value decay");
  gen_cmd->add_option("--seed", gen.seed, "Generator seed");
  gen_cmd->add_option("--out", gen.out, "Output path")->required();

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve [[A, B], [B^T, -C]] z = f");
  solve_cmd->add_option("--A", solve.a, "A block (m x m)")->required();
  solve_cmd->add_option("--B", solve.b, "B block (m x n)")->required();
  solve_cmd->add_option("--C", solve.c, "C block (n x n)")->required();
  solve_cmd->add_option("--f", solve.f, "Right-hand side (1-column array)")->required();
  solve_cmd->add_option("--method", solve.method, "bcgs | bcgs2 | householder");
  solve_cmd->add_option("--out", solve.out, "Solution path (default: stdout)");
  solve_cmd->add_option("--z-star", solve.z_star, "Reference solution; enables the metrics report");
  solve_cmd->add_option("--report", solve.report, "Metrics CSV path (default: stderr)");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run the stability table for one test family");
  bench_cmd->add_option("--example", bench.example, "1 | 2 | 3 | custom");
  bench_cmd->add_option("--m", bench.m, "Order of A");
  bench_cmd->add_option("--n", bench.n, "Order of C");
  bench_cmd->add_option("--sA", bench.s_a, "Decades for A (examples 2, 3, custom)");
  bench_cmd->add_option("--sB", bench.s_b, "Decades for B");
  bench_cmd->add_option("--sC", bench.s_c, "Decades for C (examples 2, 3, custom)");
  bench_cmd->add_option("--t", bench.t_list, "Scaling parameters")->delimiter(',');
  bench_cmd->add_option("--seed", bench.seed, "Base seed");
  bench_cmd->add_option("--methods", bench.methods, "Subset of bcgs,bcgs2,householder")
      ->delimiter(',');
  bench_cmd->add_option("--format", bench.format, "csv | md");
  bench_cmd->add_option("--out", bench.out, "Output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : exit_config;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*solve_cmd) return run_solve(solve);
    if (*bench_cmd) return run_bench(bench);
  } catch (const sq::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_config;
  }
  return exit_config;
}
