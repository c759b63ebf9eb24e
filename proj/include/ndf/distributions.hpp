#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ndf/errors.hpp"
#include "ndf/linalg.hpp"
#include "ndf/ndf_spec.hpp"

namespace ndf {

/// Finite atomic probability law on R^n.
///
/// Atoms closer than 1e-12 in every coordinate are merged and their weights summed,
/// keeping the first occurrence. Weights must be positive and sum to 1 within 1e-12.
class DiscreteDistribution {
 public:
  static constexpr double kWeightSumTolerance = 1e-12;
  static constexpr double kDedupTolerance = 1e-12;

  DiscreteDistribution(std::vector<Vector> atoms, std::vector<double> weights) {
    if (atoms.empty()) throw ValidationError("DiscreteDistribution: at least one atom required");
    if (atoms.size() != weights.size()) {
      throw ValidationError("DiscreteDistribution: atoms and weights differ in length");
    }
    const auto dim = atoms.front().size();
    double total = 0.0;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      require_finite(atoms[i], "DiscreteDistribution atom");
      require_dim(atoms[i], dim);
      if (!(weights[i] > 0.0) || !std::isfinite(weights[i])) {
        throw ValidationError("DiscreteDistribution: weights must be strictly positive");
      }
      total += weights[i];
    }
    if (std::abs(total - 1.0) > kWeightSumTolerance) {
      throw ValidationError("DiscreteDistribution: weights sum to " + std::to_string(total) +
                            ", expected 1");
    }
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      auto it = std::find_if(atoms_.begin(), atoms_.end(), [&](const Vector& a) {
        return (a - atoms[i]).cwiseAbs().maxCoeff() <= kDedupTolerance;
      });
      if (it == atoms_.end()) {
        atoms_.push_back(std::move(atoms[i]));
        weights_.push_back(weights[i]);
      } else {
        weights_[static_cast<std::size_t>(it - atoms_.begin())] += weights[i];
      }
    }
  }

  static DiscreteDistribution point_mass(Vector x) { return {{std::move(x)}, {1.0}}; }

  static DiscreteDistribution uniform(std::vector<Vector> atoms) {
    const double w = 1.0 / static_cast<double>(atoms.size());
    std::vector<double> weights(atoms.size(), w);
    // Absorb rounding so the weights sum to one.
    double rest = 1.0;
    for (std::size_t i = 0; i + 1 < weights.size(); ++i) rest -= weights[i];
    if (!weights.empty()) weights.back() = rest;
    return {std::move(atoms), std::move(weights)};
  }

  /// One-dimensional law from scalar atoms.
  static DiscreteDistribution scalar(std::span<const double> values, std::vector<double> weights) {
    std::vector<Vector> atoms;
    atoms.reserve(values.size());
    for (double v : values) atoms.push_back(Vector::Constant(1, v));
    return {std::move(atoms), std::move(weights)};
  }

  /// Bernoulli(p) on {0, 1}; degenerate endpoints collapse to a point mass.
  static DiscreteDistribution bernoulli(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("bernoulli: p must lie in [0, 1]");
    if (p == 0.0) return point_mass(Vector::Zero(1));
    if (p == 1.0) return point_mass(Vector::Ones(1));
    const double values[] = {0.0, 1.0};
    return scalar(values, {1.0 - p, p});
  }

  [[nodiscard]] Eigen::Index dim() const noexcept { return atoms_.front().size(); }
  [[nodiscard]] std::size_t size() const noexcept { return atoms_.size(); }
  [[nodiscard]] const std::vector<Vector>& atoms() const noexcept { return atoms_; }
  [[nodiscard]] const std::vector<double>& weights() const noexcept { return weights_; }

 private:
  std::vector<Vector> atoms_;
  std::vector<double> weights_;
};

enum class Combination { Sum, Difference };

/// E f(X + Y) or E f(X - Y) for X, Y i.i.d. with law P, summed over all atom pairs.
template <ScalarField F>
double exact_expectation(F&& f, const DiscreteDistribution& law, Combination mode) {
  const auto& x = law.atoms();
  const auto& w = law.weights();
  CompensatedSum total;
  Vector z(law.dim());
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (mode == Combination::Sum) {
        z = x[i] + x[j];
      } else {
        z = x[i] - x[j];
      }
      total.add(w[i] * w[j] * f(z));
    }
  }
  return total.value();
}

inline double exact_expectation(const NdfSpec& psi, const DiscreteDistribution& law,
                                Combination mode) {
  require_dim(law.atoms().front(), psi.dim());
  return exact_expectation([&psi](const Vector& z) { return psi.evaluate_unchecked(z); }, law,
                           mode);
}

/// E psi(X + Y) - E psi(X - Y); nonnegative for every negative definite psi.
template <ScalarField F>
double exact_gap(F&& f, const DiscreteDistribution& law) {
  return exact_expectation(f, law, Combination::Sum) -
         exact_expectation(f, law, Combination::Difference);
}

inline double exact_gap(const NdfSpec& psi, const DiscreteDistribution& law) {
  return exact_expectation(psi, law, Combination::Sum) -
         exact_expectation(psi, law, Combination::Difference);
}

/// Signs eps_1..eps_2m in {+1, -1} with zero sum.
class SignPattern {
 public:
  explicit SignPattern(std::vector<int> signs) : signs_(std::move(signs)) {
    if (signs_.empty() || signs_.size() % 2 != 0) {
      throw ValidationError("SignPattern: length must be even and positive");
    }
    int total = 0;
    for (int s : signs_) {
      if (s != 1 && s != -1) throw ValidationError("SignPattern: entries must be +1 or -1");
      total += s;
    }
    if (total != 0) throw ValidationError("SignPattern: signs must sum to zero");
  }

  [[nodiscard]] const std::vector<int>& signs() const noexcept { return signs_; }
  [[nodiscard]] std::size_t size() const noexcept { return signs_.size(); }

 private:
  std::vector<int> signs_;
};

struct SignedSumResult {
  double signed_expectation;    // E psi(sum eps_j X_j)
  double all_plus_expectation;  // E psi(sum X_j)
  double gap;                   // all_plus - signed
  std::uint64_t outcomes;
};

inline constexpr std::uint64_t kEnumerationLimit = 10'000'000;

/// Number of outcomes atoms^length, or nullopt once it passes `limit`.
inline std::optional<std::uint64_t> enumeration_size(std::size_t atoms, std::size_t length,
                                                     std::uint64_t limit = kEnumerationLimit) {
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < length; ++k) {
    if (atoms != 0 && total > limit / atoms) return std::nullopt;
    total *= atoms;
  }
  if (total > limit) return std::nullopt;
  return total;
}

template <ScalarField F>
SignedSumResult exact_signed_sum_gap(F&& f, const DiscreteDistribution& law,
                                     const SignPattern& pattern,
                                     std::uint64_t limit = kEnumerationLimit) {
  const std::size_t k = law.size();
  const std::size_t len = pattern.size();
  const auto outcomes = enumeration_size(k, len, limit);
  if (!outcomes) {
    throw EnumerationLimitExceeded("signed-sum enumeration needs " + std::to_string(k) + "^" +
                                   std::to_string(len) + " outcomes, above the limit of " +
                                   std::to_string(limit) + "; use the Monte Carlo estimator");
  }
  const auto& x = law.atoms();
  const auto& w = law.weights();
  const auto& eps = pattern.signs();
  std::vector<std::size_t> idx(len, 0);
  CompensatedSum signed_sum;
  CompensatedSum plus_sum;
  Vector s_signed(law.dim());
  Vector s_plus(law.dim());
  for (std::uint64_t n = 0; n < *outcomes; ++n) {
    double weight = 1.0;
    s_signed.setZero();
    s_plus.setZero();
    for (std::size_t j = 0; j < len; ++j) {
      weight *= w[idx[j]];
      s_plus += x[idx[j]];
      if (eps[j] > 0) {
        s_signed += x[idx[j]];
      } else {
        s_signed -= x[idx[j]];
      }
    }
    signed_sum.add(weight * f(s_signed));
    plus_sum.add(weight * f(s_plus));
    for (std::size_t j = len; j-- > 0;) {
      if (++idx[j] < k) break;
      idx[j] = 0;
    }
  }
  const double signed_value = signed_sum.value();
  const double plus_value = plus_sum.value();
  return {signed_value, plus_value, plus_value - signed_value, *outcomes};
}

inline SignedSumResult exact_signed_sum_gap(const NdfSpec& psi, const DiscreteDistribution& law,
                                            const SignPattern& pattern,
                                            std::uint64_t limit = kEnumerationLimit) {
  require_dim(law.atoms().front(), psi.dim());
  return exact_signed_sum_gap([&psi](const Vector& z) { return psi.evaluate_unchecked(z); }, law,
                              pattern, limit);
}

// ---------------------------------------------------------------------------
// Two-point family on {1, -M} with P(-M) = c / M, for which E|X-Y|^alpha can
// exceed E|X+Y|^alpha once alpha > 2.

struct CounterexampleParams {
  double alpha;
  double c;
  double M;

  CounterexampleParams(double alpha_, double c_, double M_) : alpha(alpha_), c(c_), M(M_) {
    if (!(alpha > 2.0) || !std::isfinite(alpha)) {
      throw ValidationError("CounterexampleParams: alpha must be a finite value > 2");
    }
    if (!(c > 0.0) || !std::isfinite(c)) throw ValidationError("CounterexampleParams: c must be > 0");
    if (!(M >= c) || !std::isfinite(M)) throw ValidationError("CounterexampleParams: M must be >= c");
  }

  [[nodiscard]] double q() const noexcept { return c / M; }
  [[nodiscard]] double p() const noexcept { return 1.0 - q(); }
};

/// Law on {1, -M} with weights {1 - c/M, c/M}; c = M gives a point mass at -M.
inline DiscreteDistribution two_point_law(double c, double M) {
  if (!(c > 0.0) || !(M >= c)) throw ValidationError("two_point_law: need 0 < c <= M");
  const double q = c / M;
  const double p = 1.0 - q;
  if (p <= 0.0) return DiscreteDistribution::point_mass(Vector::Constant(1, -M));
  const double values[] = {1.0, -M};
  return DiscreteDistribution::scalar(values, {p, q});
}

inline DiscreteDistribution counterexample_distribution(const CounterexampleParams& params) {
  return two_point_law(params.c, params.M);
}

/// E|X op Y|^alpha for a one-dimensional law, any alpha > 0 (not restricted to cnd powers).
inline double raw_power_moment(const DiscreteDistribution& law, double alpha, Combination mode) {
  if (law.dim() != 1) throw DimensionMismatch(1, static_cast<std::size_t>(law.dim()));
  if (!(alpha > 0.0)) throw DomainError("raw_power_moment: alpha must be > 0");
  return exact_expectation([alpha](const Vector& z) { return std::pow(std::abs(z[0]), alpha); },
                           law, mode);
}

/// E|X-Y|^alpha - E|X+Y|^alpha by enumerating the atoms of the two-point law.
inline double counterexample_gap_enumerated(double alpha, double c, double M) {
  const auto law = two_point_law(c, M);
  return raw_power_moment(law, alpha, Combination::Difference) -
         raw_power_moment(law, alpha, Combination::Sum);
}

/// E|X-Y|^alpha - E|X+Y|^alpha in closed form; requires M >= 1.
///
/// Valid for every alpha > 0. Positive values witness the failure of the
/// moment inequality, which can only happen for alpha > 2.
inline double counterexample_gap_closed_form(double alpha, double c, double M) {
  if (!(alpha > 0.0)) throw DomainError("counterexample gap: alpha must be > 0");
  if (!(c > 0.0) || !(M >= c)) throw ValidationError("counterexample gap: need 0 < c <= M");
  if (!(M >= 1.0)) throw DomainError("counterexample gap: closed form requires M >= 1");
  const double q = c / M;
  const double p = 1.0 - q;
  const double two_alpha = std::pow(2.0, alpha);
  return 2.0 * p * q * std::pow(M + 1.0, alpha) - two_alpha * p * p -
         two_alpha * std::pow(M, alpha) * q * q - 2.0 * p * q * std::pow(M - 1.0, alpha);
}

inline double counterexample_gap_closed_form(const CounterexampleParams& params) {
  return counterexample_gap_closed_form(params.alpha, params.c, params.M);
}

/// Threshold below which c guarantees a violation for large enough M.
inline double counterexample_c_threshold(double alpha) { return std::pow(2.0, 2.0 - alpha) * alpha; }

/// Smallest M in the grid with a positive closed-form gap.
///
/// Grid entries below max(c, 1) are skipped since the law or the closed form is
/// undefined there.
inline std::optional<double> counterexample_search(double alpha, double c,
                                                   std::span<const double> m_grid) {
  if (!(alpha > 2.0)) throw ValidationError("counterexample_search: alpha must be > 2");
  if (!(c > 0.0)) throw ValidationError("counterexample_search: c must be > 0");
  if (m_grid.empty()) throw ValidationError("counterexample_search: grid must be nonempty");
  for (std::size_t i = 1; i < m_grid.size(); ++i) {
    if (!(m_grid[i] > m_grid[i - 1])) {
      throw ValidationError("counterexample_search: grid must be strictly increasing");
    }
  }
  const double lower = std::max(c, 1.0);
  for (double m : m_grid) {
    if (m < lower) continue;
    if (counterexample_gap_closed_form(alpha, c, m) > 0.0) return m;
  }
  return std::nullopt;
}

struct TailIdentity {
  double lhs;  // E|X+Y| - E|X-Y|
  double rhs;  // 2 * int_0^inf [P(X>r) - P(X<-r)]^2 dr
};

/// Evaluates both sides exactly; the integral is a sum over constant segments
/// between consecutive breakpoints |x_i|.
inline TailIdentity tail_identity_check(const DiscreteDistribution& law) {
  if (law.dim() != 1) throw DimensionMismatch(1, static_cast<std::size_t>(law.dim()));
  const auto abs_fn = [](const Vector& z) { return std::abs(z[0]); };
  const double lhs = exact_expectation(abs_fn, law, Combination::Sum) -
                     exact_expectation(abs_fn, law, Combination::Difference);

  std::vector<double> breaks;
  breaks.reserve(law.size() + 1);
  breaks.push_back(0.0);
  for (const auto& a : law.atoms()) breaks.push_back(std::abs(a[0]));
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  CompensatedSum integral;
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    // Constant on the open segment; probe at its midpoint.
    const double r = 0.5 * (breaks[k] + breaks[k + 1]);
    double upper = 0.0;
    double lower = 0.0;
    for (std::size_t i = 0; i < law.size(); ++i) {
      const double x = law.atoms()[i][0];
      if (x > r) upper += law.weights()[i];
      if (x < -r) lower += law.weights()[i];
    }
    const double diff = upper - lower;
    integral.add((breaks[k + 1] - breaks[k]) * diff * diff);
  }
  return {lhs, 2.0 * integral.value()};
}

struct EssBounds {
  double diff_sup;  // ess sup |X - Y| = M - m
  double sum_sup;   // ess sup |X + Y| = 2 max(|M|, |m|)
};

inline EssBounds ess_bounds_check(const DiscreteDistribution& law) {
  if (law.dim() != 1) throw DimensionMismatch(1, static_cast<std::size_t>(law.dim()));
  double hi = law.atoms().front()[0];
  double lo = hi;
  for (const auto& a : law.atoms()) {
    hi = std::max(hi, a[0]);
    lo = std::min(lo, a[0]);
  }
  return {hi - lo, 2.0 * std::max(std::abs(hi), std::abs(lo))};
}

}  // namespace ndf
