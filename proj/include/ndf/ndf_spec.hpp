#pragma once

#include <cmath>
#include <concepts>
#include <type_traits>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ndf/bernstein.hpp"
#include "ndf/errors.hpp"
#include "ndf/linalg.hpp"

namespace ndf {

struct LevyAtom {
  Vector u;  // nonzero jump location
  double m;  // positive mass
};

/// Levy-Khintchine data (a, Q, nu) with nu a finite atomic measure.
struct LevyTriplet {
  double a = 0.0;
  Matrix Q;
  std::vector<LevyAtom> atoms;

  [[nodiscard]] Eigen::Index dim() const noexcept { return Q.rows(); }

  /// Integrability sum_k m_k min(|u_k|^2, 1); finite for any atomic measure.
  [[nodiscard]] double levy_integrability() const {
    double total = 0.0;
    for (const auto& atom : atoms) total += atom.m * std::min(atom.u.squaredNorm(), 1.0);
    return total;
  }
};

/// Tolerance used when checking that Q is positive semidefinite.
inline double triplet_psd_tolerance(const Matrix& q) {
  if (q.size() == 0) return 0.0;
  return 64.0 * kMachineEpsilon * static_cast<double>(q.rows()) * q.cwiseAbs().maxCoeff();
}

inline void validate_triplet(const LevyTriplet& t) {
  if (!(t.a >= 0.0) || !std::isfinite(t.a)) throw ValidationError("LevyTriplet: a must be >= 0");
  if (t.Q.rows() < 1 || t.Q.rows() != t.Q.cols()) {
    throw ValidationError("LevyTriplet: Q must be a square matrix of size >= 1");
  }
  if (!t.Q.allFinite()) throw ValidationError("LevyTriplet: Q entries must be finite");
  if (!is_symmetric(t.Q, 1e-12)) throw ValidationError("LevyTriplet: Q must be symmetric");
  const double tol = triplet_psd_tolerance(t.Q);
  if (min_eigenvalue(t.Q) < -tol) throw ValidationError("LevyTriplet: Q must be positive semidefinite");
  for (const auto& atom : t.atoms) {
    if (atom.u.size() != t.Q.rows()) {
      throw DimensionMismatch(static_cast<std::size_t>(t.Q.rows()),
                              static_cast<std::size_t>(atom.u.size()));
    }
    if (!atom.u.allFinite()) throw ValidationError("LevyTriplet: atom location must be finite");
    if (atom.u.isZero(0.0)) throw ValidationError("LevyTriplet: atom location must be nonzero");
    if (!(atom.m > 0.0) || !std::isfinite(atom.m)) {
      throw ValidationError("LevyTriplet: atom mass must be > 0");
    }
  }
}

struct FromTriplet;
struct EuclideanPower;
struct Subordinated;
struct ConicSum;
struct NdfNode;

/// Real-valued continuous negative definite function on R^n with psi(0) = 0.
///
/// Immutable; copies share the underlying expression tree.
class NdfSpec {
 public:
  using Node = std::variant<FromTriplet, EuclideanPower, Subordinated, ConicSum>;

  static NdfSpec from_triplet(LevyTriplet triplet);
  static NdfSpec quadratic(const Matrix& q);
  static NdfSpec euclidean_power(double alpha, Eigen::Index dim);
  static NdfSpec subordinated(BernsteinSpec f, NdfSpec inner);
  static NdfSpec conic_sum(std::vector<std::pair<double, NdfSpec>> terms);

  [[nodiscard]] Eigen::Index dim() const noexcept { return dim_; }
  [[nodiscard]] const Node& node() const noexcept;

  /// Evaluates psi without checking the argument dimension.
  [[nodiscard]] double evaluate_unchecked(const Vector& xi) const;

  [[nodiscard]] double operator()(const Vector& xi) const {
    require_dim(xi, dim_);
    if (!xi.allFinite()) throw DomainError("NdfSpec: argument must have finite coordinates");
    return evaluate_unchecked(xi);
  }

 private:
  NdfSpec(std::shared_ptr<const NdfNode> node, Eigen::Index dim) : node_(std::move(node)), dim_(dim) {}

  std::shared_ptr<const NdfNode> node_;
  Eigen::Index dim_;
};

struct FromTriplet {
  LevyTriplet triplet;
};

struct EuclideanPower {
  double alpha;
};

struct Subordinated {
  BernsteinSpec f;
  NdfSpec inner;
};

struct ConicTerm {
  double c;
  NdfSpec term;
};

struct ConicSum {
  std::vector<ConicTerm> terms;
};

struct NdfNode {
  NdfSpec::Node value;
};

inline const NdfSpec::Node& NdfSpec::node() const noexcept { return node_->value; }

inline NdfSpec NdfSpec::from_triplet(LevyTriplet triplet) {
  validate_triplet(triplet);
  if (triplet.a != 0.0) {
    throw ValidationError("NdfSpec: killing constant a must be 0 so that psi(0) = 0");
  }
  // Symmetrize so that <Q xi, xi> is exactly even in xi.
  triplet.Q = 0.5 * (triplet.Q + triplet.Q.transpose()).eval();
  const auto dim = triplet.Q.rows();
  return NdfSpec(std::make_shared<const NdfNode>(NdfNode{FromTriplet{std::move(triplet)}}), dim);
}

inline NdfSpec NdfSpec::quadratic(const Matrix& q) { return from_triplet(LevyTriplet{0.0, q, {}}); }

inline NdfSpec NdfSpec::euclidean_power(double alpha, Eigen::Index dim) {
  if (!(alpha > 0.0 && alpha <= 2.0)) {
    throw ValidationError("EuclideanPower: alpha must lie in (0, 2]");
  }
  if (dim < 1) throw ValidationError("EuclideanPower: dim must be >= 1");
  return NdfSpec(std::make_shared<const NdfNode>(NdfNode{EuclideanPower{alpha}}), dim);
}

inline NdfSpec NdfSpec::subordinated(BernsteinSpec f, NdfSpec inner) {
  if (f.at_zero() != 0.0) {
    throw ValidationError("Subordinated: Bernstein killing term a must be 0 so that psi(0) = 0");
  }
  const auto dim = inner.dim();
  return NdfSpec(std::make_shared<const NdfNode>(NdfNode{Subordinated{std::move(f), std::move(inner)}}), dim);
}

inline NdfSpec NdfSpec::conic_sum(std::vector<std::pair<double, NdfSpec>> terms) {
  if (terms.empty()) throw ValidationError("ConicSum: at least one term required");
  const auto dim = terms.front().second.dim();
  ConicSum sum;
  sum.terms.reserve(terms.size());
  for (auto& [c, term] : terms) {
    if (!(c >= 0.0) || !std::isfinite(c)) throw ValidationError("ConicSum: coefficients must be >= 0");
    if (term.dim() != dim) {
      throw DimensionMismatch(static_cast<std::size_t>(dim), static_cast<std::size_t>(term.dim()));
    }
    sum.terms.push_back(ConicTerm{c, std::move(term)});
  }
  return NdfSpec(std::make_shared<const NdfNode>(NdfNode{std::move(sum)}), dim);
}

namespace detail {

inline double eval_triplet(const LevyTriplet& t, const Vector& xi) {
  double value = 0.5 * xi.dot(t.Q * xi);
  if (value < 0.0) value = 0.0;  // Q is PSD only up to tolerance
  for (const auto& atom : t.atoms) {
    const double half = 0.5 * std::abs(xi.dot(atom.u));
    const double s = std::sin(half);
    value += 2.0 * s * s * atom.m;  // 1 - cos(x) = 2 sin^2(x/2)
  }
  return value;
}

}  // namespace detail

inline double NdfSpec::evaluate_unchecked(const Vector& xi) const {
  return std::visit(
      [&xi](const auto& n) -> double {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, FromTriplet>) {
          return detail::eval_triplet(n.triplet, xi);
        } else if constexpr (std::is_same_v<T, EuclideanPower>) {
          const double sq = xi.squaredNorm();
          if (n.alpha == 2.0) return sq;
          return std::pow(sq, 0.5 * n.alpha);
        } else if constexpr (std::is_same_v<T, Subordinated>) {
          return n.f(n.inner.evaluate_unchecked(xi));
        } else {
          double total = 0.0;
          for (const auto& term : n.terms) total += term.c * term.term.evaluate_unchecked(xi);
          return total;
        }
      },
      node_->value);
}

/// Plain callables Vector -> double; NdfSpec arguments take the checked overloads.
template <class F>
concept ScalarField = !std::same_as<std::remove_cvref_t<F>, NdfSpec> && std::invocable<F&, const Vector&>;

inline double eval_psi(const NdfSpec& psi, const Vector& xi) { return psi(xi); }

inline NdfSpec subordinate(const BernsteinSpec& f, const NdfSpec& psi) {
  return NdfSpec::subordinated(f, psi);
}

/// d_psi(xi, eta) = sqrt(psi(xi - eta)).
inline double metric_dpsi(const NdfSpec& psi, const Vector& xi, const Vector& eta) {
  require_dim(xi, psi.dim());
  require_dim(eta, psi.dim());
  return std::sqrt(psi(xi - eta));
}

/// K^psi(xi, eta) = psi(xi + eta) - psi(xi - eta).
inline double kernel_Kpsi(const NdfSpec& psi, const Vector& xi, const Vector& eta) {
  require_dim(xi, psi.dim());
  require_dim(eta, psi.dim());
  return psi(xi + eta) - psi(xi - eta);
}

}  // namespace ndf
