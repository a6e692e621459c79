#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "saddleqr/bench.hpp"

using namespace saddleqr;
using namespace saddleqr::bench;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

BenchConfig small_config() {
  BenchConfig cfg = default_config(Example::custom);
  cfg.m = 10;
  cfg.n = 4;
  cfg.t_list = {0.5, 2.0};
  cfg.methods = {SolveMethod::householder, SolveMethod::bcgs2};
  return cfg;
}

std::string csv_of(const BenchConfig& cfg) {
  std::ostringstream out;
  write_csv(out, run(cfg));
  return out.str();
}

}  // namespace

TEST(Bench, Defaults) {
  const BenchConfig one = default_config(Example::one);
  EXPECT_EQ(one.m, 12u);
  EXPECT_EQ(one.n, 6u);
  EXPECT_EQ(one.t_list.size(), 5u);
  EXPECT_EQ(default_config(Example::two).m, 1000u);
  EXPECT_EQ(default_config(Example::three).n, 100u);
  EXPECT_EQ(parse_example("custom"), Example::custom);
  EXPECT_THROW((void)parse_example("4"), Error);
  EXPECT_THROW((void)parse_format("json"), Error);
}

TEST(Bench, CheckRejectsBadConfigs) {
  BenchConfig cfg = small_config();
  cfg.t_list = {1.0, 0.0};
  EXPECT_THROW(cfg.check(), Error);
  cfg = small_config();
  cfg.methods.clear();
  EXPECT_THROW(cfg.check(), Error);
  cfg = small_config();
  cfg.t_list.clear();
  EXPECT_THROW(cfg.check(), Error);
}

TEST(Bench, OrderedMethods) {
  const auto m = ordered_methods({SolveMethod::householder, SolveMethod::bcgs,
                                  SolveMethod::householder});
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m[0], SolveMethod::bcgs);
  EXPECT_EQ(m[1], SolveMethod::householder);
}

TEST(Bench, CsvLayoutAndRoundTrip) {
  const BenchConfig cfg = small_config();
  const BenchResult result = run(cfg);
  ASSERT_TRUE(result.complete());
  std::ostringstream out;
  write_csv(out, result);
  const auto lines = split(out.str(), '\n');
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[0],
            "t,kappa_M,orth_bcgs2,dec_bcgs2,res_bcgs2,stab_bcgs2,"
            "orth_householder,dec_householder,res_householder,stab_householder");
  for (std::size_t r = 0; r < 2; ++r) {
    const auto cells = split(lines[r + 1], ',');
    ASSERT_EQ(cells.size(), 10u);
    EXPECT_EQ(std::stod(cells[0]), cfg.t_list[r]);
    EXPECT_EQ(std::stod(cells[1]), *result.rows[r].kappa);
    const StabilityReport& h = *result.rows[r].methods[1].report;
    EXPECT_EQ(result.rows[r].methods[1].method, SolveMethod::householder);
    EXPECT_EQ(std::stod(cells[6]), h.orth);
    EXPECT_EQ(std::stod(cells[9]), h.stab);
    EXPECT_LE(h.stab, 10.0);
  }
}

TEST(Bench, Deterministic) {
  const BenchConfig cfg = small_config();
  EXPECT_EQ(csv_of(cfg), csv_of(cfg));
  BenchConfig other = cfg;
  other.seed = 1;
  EXPECT_NE(csv_of(cfg), csv_of(other));
}

TEST(Bench, BaseMatricesSharedAcrossScales) {
  BenchConfig cfg = small_config();
  const auto p1 = build_problem(cfg, 1.0);
  const auto p2 = build_problem(cfg, 2.0);
  const SaddleBlocks base = base_blocks(cfg);
  EXPECT_EQ(p1.blocks.a, base.a);
  EXPECT_EQ(p2.blocks.b, 2.0 * base.b);
}

TEST(Bench, FailedCellsAreMarked) {
  // With a rank-one C, a numerically rank-deficient B makes M singular.
  BenchConfig cfg = default_config(Example::one);
  cfg.s_b = 40;
  cfg.t_list = {1.0};
  const BenchResult result = run(cfg);
  EXPECT_FALSE(result.complete());
  std::ostringstream out;
  write_csv(out, result);
  EXPECT_NE(out.str().find("ERR:rank"), std::string::npos) << out.str();
}

TEST(Bench, MarkdownLayout) {
  BenchConfig cfg = default_config(Example::one);
  cfg.t_list = {0.01, 1.0};
  cfg.format = Format::md;
  std::ostringstream out;
  write(out, run(cfg));
  const auto lines = split(out.str(), '\n');
  ASSERT_GE(lines.size(), 3u + 8u);
  EXPECT_NE(lines[0].find("| 0.01 |"), std::string::npos) << lines[0];
  EXPECT_NE(lines[0].find("| 1 |"), std::string::npos) << lines[0];
  EXPECT_NE(out.str().find("res_BCGS2"), std::string::npos) << out.str();
  EXPECT_NE(out.str().find("~"), std::string::npos) << out.str();
}
