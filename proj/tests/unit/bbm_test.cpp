#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "ndf/bbm.hpp"
#include "ndf/kernel_lab.hpp"
#include "random_specs.hpp"

namespace ndf {
namespace {

TEST(BbmParams, Domain) {
  EXPECT_NO_THROW(BbmParams(1.0, 1.0));
  EXPECT_NO_THROW(BbmParams(0.5, 2.0));
  EXPECT_THROW(BbmParams(0.0, 1.0), ValidationError);
  EXPECT_THROW(BbmParams(1.1, 0.5), ValidationError);
  EXPECT_THROW(BbmParams(0.5, 0.0), ValidationError);
  EXPECT_THROW(BbmParams(0.5, 2.1), ValidationError);
  EXPECT_THROW(BbmParams(0.8, 1.5), ValidationError);
  EXPECT_THROW(BbmParams(1.0, 2.0), ValidationError);
}

TEST(BbmCovariance, BrownianMotion) {
  const BbmParams bm(0.5, 1.0);
  EXPECT_DOUBLE_EQ(bbm_covariance(bm, 2.0, 3.0), 2.0);
  EXPECT_DOUBLE_EQ(bbm_covariance(bm, 3.0, 2.0), 2.0);
  EXPECT_DOUBLE_EQ(bbm_covariance(bm, 1.5, 1.5), 1.5);
  EXPECT_EQ(bbm_covariance(bm, 0.0, 4.0), 0.0);
  const std::vector<double> grid{0.5, 1.0, 2.0, 3.5};
  const Matrix c = bbm_cov_matrix(bm, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = 0; j < grid.size(); ++j) {
      EXPECT_NEAR(c(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)), std::min(grid[i], grid[j]), 1e-14);
    }
  }
}

TEST(BbmCovariance, FractionalCase) {
  // K = 1 is fractional Brownian motion: 0.5 (t^2H + s^2H - |t-s|^2H).
  const BbmParams p(0.7, 1.0);
  const double t = 1.3;
  const double s = 0.4;
  EXPECT_NEAR(bbm_covariance(p, t, s),
              0.5 * (std::pow(t, 1.4) + std::pow(s, 1.4) - std::pow(t - s, 1.4)), 1e-14);
  EXPECT_NEAR(bbm_covariance(BbmParams(0.6, 1.5), 2.0, 2.0), std::pow(2.0, 1.8), 1e-13);
  EXPECT_THROW(bbm_covariance(p, -1.0, 1.0), DomainError);
}

TEST(BbmCovariance, PsdOnRandomGrids) {
  testing::Rng rng(90);
  for (int trial = 0; trial < 200; ++trial) {
    const double h = testing::uniform(rng, 0.05, 1.0);
    const double k = testing::uniform(rng, 0.05, std::min(2.0, 1.0 / h));
    std::vector<double> grid;
    double t = 0.0;
    const int n = testing::uniform_int(rng, 1, 15);
    for (int i = 0; i < n; ++i) {
      t += testing::uniform(rng, 0.01, 1.0);
      grid.push_back(t);
    }
    const auto r = psd_check(bbm_cov_matrix(BbmParams(h, k), grid));
    ASSERT_TRUE(r.psd) << h << " " << k << " " << r.min_eigenvalue;
  }
}

TEST(BbmCovariance, GridValidation) {
  const BbmParams p(0.5, 1.0);
  EXPECT_THROW(bbm_cov_matrix(p, std::vector<double>{}), ValidationError);
  EXPECT_THROW(bbm_cov_matrix(p, std::vector<double>{1.0, 0.5}), ValidationError);
  EXPECT_THROW(bbm_cov_matrix(p, std::vector<double>{-1.0, 0.5}), ValidationError);
}

TEST(KernelIdentity, Grid) {
  for (double alpha : {0.3, 1.0, 1.5, 2.0}) {
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      for (int j = 0; j < 50; ++j) {
        const double xi = -5.0 + 10.0 * i / 49.0;
        const double eta = -5.0 + 10.0 * j / 49.0;
        const double scale = std::max(1.0, std::pow(std::abs(xi) + std::abs(eta), alpha));
        worst = std::max(worst, kernel_bbm_identity_gap(alpha, xi, eta) / scale);
      }
    }
    EXPECT_LE(worst, 1e-12) << alpha;
  }
}

TEST(KernelIdentity, MatchesNdfKernel) {
  testing::Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const double alpha = testing::uniform(rng, 0.1, 2.0);
    const auto psi = NdfSpec::euclidean_power(alpha, 1);
    const double xi = testing::uniform(rng, -4.0, 4.0);
    const double eta = testing::uniform(rng, -4.0, 4.0);
    const double k = kernel_Kpsi(psi, Vector::Constant(1, xi), Vector::Constant(1, eta));
    ASSERT_NEAR(bbm_kernel_value(alpha, xi, eta), k, 1e-11 * std::max(1.0, std::abs(k)));
  }
  EXPECT_THROW(bbm_kernel_value(2.5, 1.0, 1.0), DomainError);
}

TEST(Sampling, DeterministicAndZeroAtOrigin) {
  const std::vector<double> grid{0.0, 0.5, 1.0, 1.5};
  const BbmParams p(0.5, 0.5);
  const auto a = bbm_sample_paths(p, grid, 3000, 17, 1);
  const auto b = bbm_sample_paths(p, grid, 3000, 17, 4);
  EXPECT_EQ(a.values, b.values);
  EXPECT_EQ(a.values.col(0).cwiseAbs().maxCoeff(), 0.0);
  EXPECT_GT(a.values.col(1).cwiseAbs().maxCoeff(), 0.0);
  const auto c = bbm_sample_paths(p, grid, 3000, 18, 1);
  EXPECT_NE(a.values, c.values);
  EXPECT_THROW(bbm_sample_paths(p, grid, 0, 1), ValidationError);
}

TEST(Sampling, EmpiricalCovariance) {
  const std::vector<double> grid{0.25, 0.5, 0.75, 1.0, 1.25};
  for (const auto& p : {BbmParams(0.5, 1.0), BbmParams(0.3, 1.8), BbmParams(0.9, 0.4)}) {
    const std::uint64_t n = 40000;
    const auto paths = bbm_sample_paths(p, grid, n, 123);
    const Matrix truth = bbm_cov_matrix(p, grid);
    const Matrix emp = empirical_covariance(paths);
    const Matrix se = gaussian_covariance_stderr(truth, n);
    EXPECT_LE(((emp - truth).cwiseAbs().array() / se.array()).maxCoeff(), 5.0);
  }
}

TEST(Sampling, PathsTable) {
  const std::vector<double> grid{0.0, 1.0};
  const auto t = paths_table(bbm_sample_paths(BbmParams(0.5, 1.0), grid, 3, 1));
  ASSERT_EQ(t.header.size(), 2u);
  EXPECT_EQ(t.header[0], "0");
  EXPECT_EQ(t.header[1], "1");
  ASSERT_EQ(t.rows.size(), 3u);
  EXPECT_EQ(t.rows[0][0], "0");
}

}  // namespace
}  // namespace ndf
