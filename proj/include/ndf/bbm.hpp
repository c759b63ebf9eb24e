#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ndf/csv.hpp"
#include "ndf/errors.hpp"
#include "ndf/linalg.hpp"
#include "ndf/parallel.hpp"
#include "ndf/rng.hpp"

namespace ndf {

/// Bifractional Brownian motion parameters, restricted to
/// D = {0 < H <= 1, 0 < K <= 2, H * K <= 1}.
struct BbmParams {
  double H;
  double K;

  BbmParams(double h, double k) : H(h), K(k) {
    if (!(H > 0.0 && H <= 1.0)) throw ValidationError("BbmParams: H must lie in (0, 1]");
    if (!(K > 0.0 && K <= 2.0)) throw ValidationError("BbmParams: K must lie in (0, 2]");
    if (!(H * K <= 1.0)) throw ValidationError("BbmParams: H * K must be <= 1");
  }
};

/// R(t, s) = 2^-K ((t^2H + s^2H)^K - |t - s|^2HK) for t, s >= 0.
inline double bbm_covariance(const BbmParams& p, double t, double s) {
  if (!(t >= 0.0) || !(s >= 0.0) || !std::isfinite(t) || !std::isfinite(s)) {
    throw DomainError("bbm_covariance: times must be finite and >= 0");
  }
  if (t == 0.0 || s == 0.0) return 0.0;
  const double hk2 = 2.0 * p.H * p.K;
  if (t == s) return std::pow(t, hk2);
  const double sum = std::pow(t, 2.0 * p.H) + std::pow(s, 2.0 * p.H);
  return std::pow(2.0, -p.K) * (std::pow(sum, p.K) - std::pow(std::abs(t - s), hk2));
}

inline void validate_grid(std::span<const double> grid) {
  if (grid.empty()) throw ValidationError("time grid must be nonempty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] >= 0.0) || !std::isfinite(grid[i])) {
      throw ValidationError("time grid entries must be finite and >= 0");
    }
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      throw ValidationError("time grid must be strictly increasing");
    }
  }
}

inline Matrix bbm_cov_matrix(const BbmParams& p, std::span<const double> grid) {
  validate_grid(grid);
  const auto n = static_cast<Eigen::Index>(grid.size());
  Matrix c(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      c(i, j) = bbm_covariance(p, grid[static_cast<std::size_t>(i)], grid[static_cast<std::size_t>(j)]);
      c(j, i) = c(i, j);
    }
  }
  return c;
}

struct GridPath {
  std::vector<double> grid;
  Matrix values;  // paths x grid points
  std::uint64_t seed = 0;

  [[nodiscard]] Eigen::Index n_paths() const noexcept { return values.rows(); }
};

/// Factor F with F F^T = C from a symmetric eigendecomposition. Eigenvalues in
/// [-tol, 0) are clipped to zero, tol = 64 * eps * n * max diagonal.
inline Matrix covariance_factor(const Matrix& cov) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(cov);
  if (solver.info() != Eigen::Success) throw IndefiniteCovariance("eigendecomposition failed");
  const double max_diag = cov.diagonal().cwiseAbs().maxCoeff();
  const double tol = 64.0 * kMachineEpsilon * static_cast<double>(cov.rows()) * max_diag;
  Vector lambda = solver.eigenvalues();
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    if (lambda[i] < -tol) {
      throw IndefiniteCovariance("covariance has eigenvalue " + std::to_string(lambda[i]) +
                                 " below -" + std::to_string(tol));
    }
    if (lambda[i] < 0.0) lambda[i] = 0.0;
  }
  return solver.eigenvectors() * lambda.cwiseSqrt().asDiagonal();
}

/// i.i.d. centred Gaussian paths; path k uses substream k of `seed`.
/// Grid points at t = 0 are exactly zero in every path.
inline GridPath bbm_sample_paths(const BbmParams& p, std::span<const double> grid,
                                 std::uint64_t n_paths, std::uint64_t seed, unsigned threads = 1) {
  validate_grid(grid);
  if (n_paths < 1) throw ValidationError("bbm_sample_paths: n_paths must be >= 1");
  // Only the leading grid point can be zero.
  const std::size_t offset = grid.front() == 0.0 ? 1 : 0;
  const auto active = grid.subspan(offset);

  GridPath out;
  out.grid.assign(grid.begin(), grid.end());
  out.seed = seed;
  out.values = Matrix::Zero(static_cast<Eigen::Index>(n_paths), static_cast<Eigen::Index>(grid.size()));
  if (active.empty()) return out;

  const Matrix factor = covariance_factor(bbm_cov_matrix(p, active));
  const auto m = factor.rows();
  constexpr std::uint64_t kBlock = 1024;
  const std::uint64_t blocks = (n_paths + kBlock - 1) / kBlock;
  parallel_for(blocks, threads, [&](std::uint64_t b) {
    const std::uint64_t begin = b * kBlock;
    const std::uint64_t end = std::min(n_paths, begin + kBlock);
    Matrix z(m, static_cast<Eigen::Index>(end - begin));
    for (std::uint64_t k = begin; k < end; ++k) {
      RandomStream rng(seed, k);
      for (Eigen::Index i = 0; i < m; ++i) z(i, static_cast<Eigen::Index>(k - begin)) = rng.normal();
    }
    out.values.block(static_cast<Eigen::Index>(begin), static_cast<Eigen::Index>(offset),
                     static_cast<Eigen::Index>(end - begin), m) = (factor * z).transpose();
  });
  return out;
}

/// Unbiased sample covariance across paths.
inline Matrix empirical_covariance(const GridPath& paths) {
  const auto n = paths.values.rows();
  if (n < 2) throw ValidationError("empirical_covariance: need at least two paths");
  const Eigen::RowVectorXd mean = paths.values.colwise().mean();
  const Matrix centred = paths.values.rowwise() - mean;
  return (centred.transpose() * centred) / static_cast<double>(n - 1);
}

/// Large-sample standard errors of sample covariance entries for a Gaussian vector:
/// sqrt((C_ii C_jj + C_ij^2) / n).
inline Matrix gaussian_covariance_stderr(const Matrix& cov, std::uint64_t n) {
  Matrix se(cov.rows(), cov.cols());
  for (Eigen::Index i = 0; i < cov.rows(); ++i) {
    for (Eigen::Index j = 0; j < cov.cols(); ++j) {
      se(i, j) = std::sqrt((cov(i, i) * cov(j, j) + cov(i, j) * cov(i, j)) / static_cast<double>(n));
    }
  }
  return se;
}

/// E(G_xi G_eta) for G_xi = 2^(alpha/2) sgn(xi) B^{1/2,alpha}_|xi|.
inline double bbm_kernel_value(double alpha, double xi, double eta) {
  if (!(alpha > 0.0 && alpha <= 2.0)) throw DomainError("alpha must lie in (0, 2]");
  const BbmParams p(0.5, alpha);
  return std::pow(2.0, alpha) * sgn(xi) * sgn(eta) * bbm_covariance(p, std::abs(xi), std::abs(eta));
}

/// |E(G_xi G_eta) - (|xi+eta|^alpha - |xi-eta|^alpha)|.
inline double kernel_bbm_identity_gap(double alpha, double xi, double eta) {
  const double lhs = bbm_kernel_value(alpha, xi, eta);
  const double rhs = std::pow(std::abs(xi + eta), alpha) - std::pow(std::abs(xi - eta), alpha);
  return std::abs(lhs - rhs);
}

/// First row grid times, then one row per path.
inline csv::Table paths_table(const GridPath& paths) {
  csv::Table t;
  for (double g : paths.grid) t.header.push_back(csv::format(g));
  for (Eigen::Index i = 0; i < paths.values.rows(); ++i) {
    std::vector<std::string> row;
    for (Eigen::Index j = 0; j < paths.values.cols(); ++j) row.push_back(csv::format(paths.values(i, j)));
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace ndf
