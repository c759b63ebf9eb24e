#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <string>

#include "ndf/errors.hpp"

namespace ndf {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

inline constexpr double kMachineEpsilon = std::numeric_limits<double>::epsilon();

/// Sign with sgn(0) = 0.
inline double sgn(double x) noexcept { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

inline void require_finite(const Vector& v, const std::string& what) {
  if (v.size() < 1) throw ValidationError(what + ": vector must have dimension >= 1");
  if (!v.allFinite()) throw ValidationError(what + ": coordinates must be finite");
}

inline void require_dim(const Vector& v, Eigen::Index dim) {
  if (v.size() != dim) {
    throw DimensionMismatch(static_cast<std::size_t>(dim), static_cast<std::size_t>(v.size()));
  }
}

/// Scale-aware PSD tolerance 64 * eps * n * max|entry|.
inline double default_psd_tolerance(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return 64.0 * kMachineEpsilon * static_cast<double>(m.rows()) * m.cwiseAbs().maxCoeff();
}

inline bool is_symmetric(const Matrix& m, double rel_tol) {
  if (m.rows() != m.cols()) return false;
  const double scale = m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
  return (m - m.transpose()).cwiseAbs().maxCoeff() <= rel_tol * scale;
}

inline double min_eigenvalue(const Matrix& symmetric) {
  if (symmetric.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(symmetric, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

/// Neumaier compensated summation; order of additions is the call order.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  [[nodiscard]] double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace ndf
