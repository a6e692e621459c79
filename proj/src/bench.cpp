#include "saddleqr/bench.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "saddleqr/linalg.hpp"
#include "saddleqr/matrix_market.hpp"

namespace saddleqr::bench {

namespace {

constexpr double kappa_flag_threshold = 1e14;

// Sub-seed slots per generated block.
enum : std::uint64_t { slot_a = 1, slot_b = 2, slot_c = 3 };

std::uint64_t block_seed(const BenchConfig& cfg, std::uint64_t slot) {
  const auto family = static_cast<std::uint64_t>(cfg.example) + 1;
  return testgen::sub_seed(cfg.seed, family * 16 + slot);
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4e", v);
  return buf;
}

// Column labels for t: shortest readable form (0.1, not 0.10000000000000001).
std::string short_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

std::string_view to_string(Example e) noexcept {
  switch (e) {
    case Example::one: return "1";
    case Example::two: return "2";
    case Example::three: return "3";
    case Example::custom: return "custom";
  }
  return "unknown";
}

Example parse_example(std::string_view name) {
  if (name == "1") return Example::one;
  if (name == "2") return Example::two;
  if (name == "3") return Example::three;
  if (name == "custom") return Example::custom;
  throw Error(ErrorCode::domain, "unknown example '" + std::string(name) + "'");
}

Format parse_format(std::string_view name) {
  if (name == "csv") return Format::csv;
  if (name == "md") return Format::md;
  throw Error(ErrorCode::domain, "unknown format '" + std::string(name) + "'");
}

void BenchConfig::check() const {
  if (t_list.empty()) throw Error(ErrorCode::domain, "bench: t list is empty");
  for (double t : t_list)
    if (t == 0.0 || !std::isfinite(t))
      throw Error(ErrorCode::domain, "bench: every t must be finite and nonzero");
  if (methods.empty()) throw Error(ErrorCode::domain, "bench: no methods requested");
  if (n == 0 || m < n)
    throw Error(ErrorCode::domain, "bench: need m >= n >= 1, got m = " + std::to_string(m) +
                                       ", n = " + std::to_string(n));
  for (double s : {s_a, s_b, s_c})
    if (!(s >= 0.0)) throw Error(ErrorCode::domain, "bench: decade exponents must be >= 0");
}

BenchConfig default_config(Example e) {
  BenchConfig cfg;
  cfg.example = e;
  switch (e) {
    case Example::one:
      cfg.m = 12;
      cfg.n = 6;
      break;
    case Example::two:
      cfg.m = 1000;
      cfg.n = 500;
      break;
    case Example::three:
      cfg.m = 3000;
      cfg.n = 100;
      break;
    case Example::custom:
      cfg.m = 20;
      cfg.n = 10;
      cfg.s_a = cfg.s_b = cfg.s_c = 2.0;
      break;
  }
  return cfg;
}

SaddleBlocks base_blocks(const BenchConfig& cfg) {
  cfg.check();
  SaddleBlocks base;
  base.b = testgen::matrix1(cfg.m, cfg.n, cfg.s_b, block_seed(cfg, slot_b));
  if (cfg.example == Example::one) {
    base.a = testgen::hilbert(cfg.m);
    base.c = testgen::ones_rank_one(cfg.n);
  } else {
    base.a = testgen::matrix2(cfg.m, cfg.s_a, block_seed(cfg, slot_a));
    base.c = testgen::matrix2(cfg.n, cfg.s_c, block_seed(cfg, slot_c));
  }
  return base;
}

testgen::ScaledProblem build_problem(const BenchConfig& cfg, double t) {
  const SaddleBlocks base = base_blocks(cfg);
  return testgen::scale_problem(base.a, base.b, base.c, t);
}

std::vector<SolveMethod> ordered_methods(const std::vector<SolveMethod>& methods) {
  std::vector<SolveMethod> out;
  for (SolveMethod m : {SolveMethod::bcgs, SolveMethod::bcgs2, SolveMethod::householder})
    if (std::find(methods.begin(), methods.end(), m) != methods.end()) out.push_back(m);
  return out;
}

BenchRow run_row(const BenchConfig& cfg, const SaddleBlocks& base, double t) {
  const testgen::ScaledProblem prob = testgen::scale_problem(base.a, base.b, base.c, t);
  const DenseMatrix m = assemble(prob.blocks);

  BenchRow row;
  row.t = t;
  try {
    row.kappa = condition_number(m).value;
  } catch (const Error& e) {
    row.kappa_error = std::string(to_string(e.code()));
  }

  for (SolveMethod method : ordered_methods(cfg.methods)) {
    MethodResult cell;
    cell.method = method;
    try {
      const Factorization qr = factorize(m, prob.blocks.m(), method);
      const Vector z = solve_factored(qr, prob.f);
      cell.report = metrics_with_kappa(m, row.kappa.value_or(std::nan("")), qr.q, qr.r, prob.f,
                                       z, prob.z_star);
    } catch (const Error& e) {
      cell.error = std::string(to_string(e.code()));
    }
    row.methods.push_back(std::move(cell));
  }
  return row;
}

BenchResult run(const BenchConfig& cfg) {
  cfg.check();
  BenchResult result;
  result.config = cfg;
  const SaddleBlocks base = base_blocks(cfg);
  for (double t : cfg.t_list) result.rows.push_back(run_row(cfg, base, t));
  return result;
}

bool BenchResult::complete() const noexcept {
  for (const BenchRow& row : rows) {
    if (!row.kappa) return false;
    for (const MethodResult& cell : row.methods)
      if (!cell.report) return false;
  }
  return true;
}

void write_csv(std::ostream& out, const BenchResult& result) {
  const auto methods = ordered_methods(result.config.methods);
  out << "t,kappa_M";
  for (SolveMethod method : methods)
    for (const char* metric : {"orth", "dec", "res", "stab"})
      out << ',' << metric << '_' << to_string(method);
  out << '\n';

  for (const BenchRow& row : result.rows) {
    out << mm::format_double(row.t) << ',';
    out << (row.kappa ? mm::format_double(*row.kappa) : "ERR:" + row.kappa_error);
    for (const MethodResult& cell : row.methods) {
      if (!cell.report) {
        for (int i = 0; i < 4; ++i) out << ",ERR:" << cell.error;
        continue;
      }
      const StabilityReport& r = *cell.report;
      out << ',' << mm::format_double(r.orth) << ',' << mm::format_double(r.dec) << ','
          << mm::format_double(r.res) << ',';
      if (row.kappa)
        out << mm::format_double(r.stab);
      else
        out << "ERR:" << row.kappa_error;
    }
    out << '\n';
  }
}

void write_markdown(std::ostream& out, const BenchResult& result) {
  const auto methods = ordered_methods(result.config.methods);
  out << "| t |";
  for (const BenchRow& row : result.rows) out << ' ' << short_label(row.t) << " |";
  out << "\n|---|";
  for (std::size_t i = 0; i < result.rows.size(); ++i) out << "---|";
  out << "\n| kappa(M) |";
  for (const BenchRow& row : result.rows) {
    if (!row.kappa)
      out << " ERR:" << row.kappa_error << " |";
    else
      out << ' ' << (*row.kappa >= kappa_flag_threshold ? "~" : "") << sci(*row.kappa) << " |";
  }
  out << '\n';

  using Field = double StabilityReport::*;
  const std::pair<const char*, Field> fields[] = {{"orth", &StabilityReport::orth},
                                                  {"dec", &StabilityReport::dec},
                                                  {"res", &StabilityReport::res},
                                                  {"stab", &StabilityReport::stab}};
  for (const auto& [name, field] : fields) {
    for (std::size_t k = 0; k < methods.size(); ++k) {
      out << "| " << name << '_' << upper(to_string(methods[k])) << " |";
      for (const BenchRow& row : result.rows) {
        const MethodResult& cell = row.methods[k];
        if (!cell.report)
          out << " ERR:" << cell.error << " |";
        else if (field == &StabilityReport::stab && !row.kappa)
          out << " ERR:" << row.kappa_error << " |";
        else
          out << ' ' << sci((*cell.report).*field) << " |";
      }
      out << '\n';
    }
  }
}

void write(std::ostream& out, const BenchResult& result) {
  if (result.config.format == Format::md)
    write_markdown(out, result);
  else
    write_csv(out, result);
}

}  // namespace saddleqr::bench
