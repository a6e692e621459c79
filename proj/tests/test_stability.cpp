#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <random>

#include "saddleqr/bench.hpp"
#include "saddleqr/householder.hpp"
#include "saddleqr/stability.hpp"
#include "saddleqr/testgen.hpp"
#include "test_support.hpp"

using namespace saddleqr;

namespace {

constexpr double slack = 10 * machine_eps;

void expect_near_orthogonality(const Lemma1Measurement& r) {
  EXPECT_LE(r.norm_q, std::sqrt(1 + r.beta) + slack);
  EXPECT_LE(r.norm_q_inv, 1 / std::sqrt(1 - r.beta) + slack);
  EXPECT_LE(r.right_defect, r.beta + slack);
}

}  // namespace

TEST(Metrics, ExactFactorizationIsZero) {
  const DenseMatrix i3 = DenseMatrix::identity(3);
  const Vector f{1, 2, 3};
  const StabilityReport r = metrics(i3, i3, i3, f, f, f);
  EXPECT_EQ(r.orth, 0.0);
  EXPECT_EQ(r.dec, 0.0);
  EXPECT_EQ(r.res, 0.0);
  EXPECT_EQ(r.stab, 0.0);
  EXPECT_NEAR(r.kappa, 1.0, 1e-12);
}

TEST(Metrics, ZeroSolutionIsDegenerate) {
  const DenseMatrix i2 = DenseMatrix::identity(2);
  try {
    (void)metrics(i2, i2, i2, Vector{1, 1}, Vector{0, 0}, Vector{1, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::degenerate_solution);
  }
}

TEST(Metrics, Example1Bands) {
  const bench::BenchConfig cfg = bench::default_config(bench::Example::one);
  const testgen::ScaledProblem p = bench::build_problem(cfg, 1.0);
  const DenseMatrix m = assemble(p.blocks);
  const Factorization f2 = factorize(m, p.blocks.m(), SolveMethod::bcgs2);
  const StabilityReport r2 = metrics(m, f2.q, f2.r, p.f, solve_factored(f2, p.f), p.z_star);
  EXPECT_LE(r2.res, 1e2);
  EXPECT_LE(r2.stab, 10);
  const Factorization f1 = factorize(m, p.blocks.m(), SolveMethod::bcgs);
  const StabilityReport r1 = metrics(m, f1.q, f1.r, p.f, solve_factored(f1, p.f), p.z_star);
  EXPECT_GE(r1.res, 1e3);
}

TEST(NearOrthogonality, OrthogonalMatrix) {
  const Lemma1Measurement r = lemma1_bounds(testgen::random_orthogonal(6, 1));
  EXPECT_LE(r.beta, 1e2 * machine_eps);
  EXPECT_NEAR(r.norm_q, 1.0, 1e-14);
  EXPECT_NEAR(r.norm_q_inv, 1.0, 1e-14);
  EXPECT_LE(r.right_defect, 1e2 * machine_eps);
}

TEST(NearOrthogonality, DiagonalSaturatesNormBound) {
  const Lemma1Measurement r =
      lemma1_bounds(DenseMatrix::from_rows({{1, 0}, {0, std::sqrt(1.19)}}));
  EXPECT_NEAR(r.beta, 0.19, 1e-15);
  EXPECT_NEAR(r.norm_q, std::sqrt(1 + r.beta), slack);
  EXPECT_NEAR(r.norm_q_inv, 1.0, 1e-15);
  expect_near_orthogonality(r);
}

TEST(NearOrthogonality, RandomPerturbationSweep) {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const double eta = std::array{1e-8, 1e-4, 1e-2}[seed % 3];
    const std::size_t n = 2 + seed % 7;
    const DenseMatrix q = testgen::random_orthogonal(n, seed) +
                          eta * test::random_matrix(n, n, seed + 7);
    const Lemma1Measurement r = lemma1_bounds(q);
    expect_near_orthogonality(r);
    ++checked;
  }
  EXPECT_EQ(checked, 100);
}

TEST(NearOrthogonality, LargeMatrixUsesEstimators) {
  const DenseMatrix q = testgen::random_orthogonal(70, 5) + 1e-3 * test::random_matrix(70, 70, 6);
  const Lemma1Measurement r = lemma1_bounds(q);
  EXPECT_GT(r.beta, 0.0);
  EXPECT_LE(r.norm_q, std::sqrt(1 + r.beta) * (1 + 1e-6));
  EXPECT_LE(r.norm_q_inv, 1 / std::sqrt(1 - r.beta) * (1 + 1e-6));
  EXPECT_LE(r.right_defect, r.beta * (1 + 1e-6));
}

TEST(NearOrthogonality, HypothesisViolated) {
  try {
    (void)lemma1_bounds(DenseMatrix::from_rows({{2, 0}, {0, 1}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::hypothesis_violated);
  }
}

TEST(PerturbationBound, ClosedForm) {
  PerturbationBound b = theorem1_bound(0, 0, 0, 0);
  EXPECT_EQ(b.mu, 0.0);
  EXPECT_EQ(b.nu, 0.0);
  b = theorem1_bound(0.1, 0, 0.1, 0.05);
  EXPECT_NEAR(b.mu, 0.21, 1e-15);
  EXPECT_NEAR(b.nu, 0.05, 1e-15);  // would be 0.1 with gamma in place of delta
  b = theorem1_bound(0, 0.2, 0, 0);
  EXPECT_EQ(b.mu, 0.0);
  EXPECT_NEAR(b.nu, 0.2, 1e-15);
}

TEST(PerturbationBound, DomainErrors) {
  EXPECT_THROW((void)theorem1_bound(0, 1.0, 0, 0), Error);
  EXPECT_THROW((void)theorem1_bound(-1, 0.5, 0, 0), Error);
}

TEST(PerturbationBound, MonotoneInEachArgument) {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> u(0.0, 0.9);
  for (int trial = 0; trial < 200; ++trial) {
    const double a = u(gen), b = u(gen) * 0.9, g = u(gen), d = u(gen);
    const double h = 0.05;
    const PerturbationBound base = theorem1_bound(a, b, g, d);
    for (int k = 0; k < 4; ++k) {
      const PerturbationBound up = theorem1_bound(a + (k == 0) * h, b + (k == 1) * h,
                                                  g + (k == 2) * h, d + (k == 3) * h);
      EXPECT_GE(up.mu, base.mu);
      EXPECT_GE(up.nu, base.nu);
    }
  }
}

TEST(BackwardCertificate, ExactInputs) {
  const DenseMatrix i4 = DenseMatrix::identity(4);
  const Vector f{1, 2, 3, 4};
  const BackwardCertificate c = backward_certificate(i4, i4, i4, f, f);
  EXPECT_TRUE(c.hypotheses_hold);
  EXPECT_LE(c.bound.mu, 10 * machine_eps);
  EXPECT_LE(c.bound.nu, 10 * machine_eps);
}

TEST(BackwardCertificate, Bcgs2CertifiesBcgsDoesNot) {
  bench::BenchConfig cfg = bench::default_config(bench::Example::two);
  cfg.m = 100;
  cfg.n = 50;
  const testgen::ScaledProblem p = bench::build_problem(cfg, 1.0);
  const DenseMatrix m = assemble(p.blocks);

  const Factorization f2 = factorize(m, p.blocks.m(), SolveMethod::bcgs2);
  const Vector z2 = solve_factored(f2, p.f);
  const BackwardCertificate c2 = backward_certificate(m, f2.q, f2.r, p.f, z2);
  EXPECT_TRUE(c2.hypotheses_hold);
  EXPECT_LE(c2.bound.mu, 1e4 * machine_eps);
  EXPECT_LE(c2.bound.nu, 1e4 * machine_eps);
  EXPECT_LE(c2.residual, c2.residual_bound() +
                             1e2 * machine_eps * (c2.norm_m * c2.norm_z + c2.norm_f));

  const Factorization f1 = factorize(m, p.blocks.m(), SolveMethod::bcgs);
  const BackwardCertificate c1 =
      backward_certificate(m, f1.q, f1.r, p.f, solve_factored(f1, p.f));
  EXPECT_GT(c1.bound.beta, 1e3 * machine_eps);
  EXPECT_GT(c1.bound.beta, 1e3 * c2.bound.beta);
}

TEST(BackwardCertificate, HypothesisFailureIsReported) {
  const DenseMatrix m = DenseMatrix::identity(2);
  const DenseMatrix bad_q = DenseMatrix::from_rows({{2, 0}, {0, 1}});
  const BackwardCertificate c = backward_certificate(m, bad_q, m, Vector{1, 1}, Vector{1, 1});
  EXPECT_FALSE(c.hypotheses_hold);
}
