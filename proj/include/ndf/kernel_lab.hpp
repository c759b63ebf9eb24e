#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <vector>

#include "ndf/distributions.hpp"
#include "ndf/errors.hpp"
#include "ndf/linalg.hpp"
#include "ndf/ndf_spec.hpp"

namespace ndf {

/// Symmetric matrix of kernel(p_i, p_j); upper triangle evaluated and mirrored.
template <class Kernel>
  requires(!std::same_as<std::remove_cvref_t<Kernel>, NdfSpec>)
Matrix gram_matrix(Kernel&& kernel, std::span<const Vector> points) {
  if (points.empty()) throw ValidationError("gram_matrix: point set must be nonempty");
  const auto dim = points.front().size();
  for (const auto& p : points) {
    require_finite(p, "gram_matrix point");
    require_dim(p, dim);
  }
  const auto n = static_cast<Eigen::Index>(points.size());
  Matrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      g(i, j) = kernel(points[static_cast<std::size_t>(i)], points[static_cast<std::size_t>(j)]);
      g(j, i) = g(i, j);
    }
  }
  return g;
}

inline Matrix gram_matrix(const NdfSpec& psi, std::span<const Vector> points) {
  if (!points.empty()) require_dim(points.front(), psi.dim());
  return gram_matrix(
      [&psi](const Vector& a, const Vector& b) {
        return psi.evaluate_unchecked(a + b) - psi.evaluate_unchecked(a - b);
      },
      points);
}

/// |x+y|^alpha - |x-y|^alpha in one dimension for any alpha > 0; a probe, not
/// a kernel of a negative definite function once alpha > 2.
inline auto raw_power_kernel(double alpha) {
  return [alpha](const Vector& a, const Vector& b) {
    return std::pow(std::abs(a[0] + b[0]), alpha) - std::pow(std::abs(a[0] - b[0]), alpha);
  };
}

struct GramResult {
  Matrix matrix;
  double min_eigenvalue;
  bool psd;
  double tol;
};

/// Minimum eigenvalue by symmetric eigendecomposition; psd iff min >= -tol.
/// Default tolerance is 64 * eps * |S| * max|entry|.
inline GramResult psd_check(Matrix m, std::optional<double> tol = std::nullopt) {
  if (m.rows() != m.cols()) throw ValidationError("psd_check: matrix must be square");
  if (!m.allFinite()) throw ValidationError("psd_check: matrix entries must be finite");
  if (!is_symmetric(m, 1e-12)) throw ValidationError("psd_check: matrix is not symmetric");
  const double t = tol.value_or(default_psd_tolerance(m));
  if (!(t >= 0.0)) throw ValidationError("psd_check: tolerance must be >= 0");
  const double lambda_min = min_eigenvalue(m);
  return {std::move(m), lambda_min, lambda_min >= -t, t};
}

/// Fast screen via pivoted LDL^T: true when no pivot falls below -tol.
inline bool ldlt_precheck(const Matrix& m, double tol) {
  Eigen::LDLT<Matrix> ldlt(m);
  if (ldlt.info() != Eigen::Success) return false;
  return ldlt.vectorD().minCoeff() >= -tol;
}

/// w^T G w.
inline double weighted_form(const Matrix& gram, const Vector& weights) {
  require_dim(weights, gram.rows());
  return weights.dot(gram * weights);
}

struct SineDecomposition {
  double direct;      // psi(xi + eta) - psi(xi - eta)
  double decomposed;  // 2 <Q xi, eta> + 2 sum_k sin<xi,u_k> sin<eta,u_k> m_k
};

inline SineDecomposition sine_decomposition_check(const NdfSpec& psi, const Vector& xi,
                                                  const Vector& eta) {
  const auto* node = std::get_if<FromTriplet>(&psi.node());
  if (node == nullptr) {
    throw ValidationError("sine_decomposition_check: psi must be given by an explicit Levy triplet");
  }
  const double direct = kernel_Kpsi(psi, xi, eta);
  const auto& t = node->triplet;
  double decomposed = 2.0 * xi.dot(t.Q * eta);
  for (const auto& atom : t.atoms) {
    decomposed += 2.0 * std::sin(xi.dot(atom.u)) * std::sin(eta.dot(atom.u)) * atom.m;
  }
  return {direct, decomposed};
}

struct VarianceIdentity {
  double quadratic_form;  // sum_ij p_i p_j K(x_i, x_j) = Var(Z)
  double gap;             // E psi(X+Y) - E psi(X-Y)
};

inline VarianceIdentity variance_identity(const NdfSpec& psi, const DiscreteDistribution& law) {
  require_dim(law.atoms().front(), psi.dim());
  const Matrix gram = gram_matrix(psi, law.atoms());
  const auto& w = law.weights();
  CompensatedSum form;
  for (Eigen::Index i = 0; i < gram.rows(); ++i) {
    for (Eigen::Index j = 0; j < gram.cols(); ++j) {
      form.add(w[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(j)] * gram(i, j));
    }
  }
  return {form.value(), exact_gap(psi, law)};
}

}  // namespace ndf
