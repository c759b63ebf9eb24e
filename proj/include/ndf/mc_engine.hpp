#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ndf/distributions.hpp"
#include "ndf/errors.hpp"
#include "ndf/linalg.hpp"
#include "ndf/ndf_spec.hpp"
#include "ndf/parallel.hpp"
#include "ndf/rng.hpp"
#include "ndf/running_stats.hpp"

namespace ndf {

struct DiscreteSampler {
  DiscreteDistribution law;
};

struct GaussianIsoSampler {
  double sigma;
  Vector mean;
};

struct UniformBoxSampler {
  Vector lower;
  Vector upper;
};

struct CounterexampleSampler {
  CounterexampleParams params;
};

/// Law from which i.i.d. draws are taken.
class SamplerSpec {
 public:
  using Variant =
      std::variant<DiscreteSampler, GaussianIsoSampler, UniformBoxSampler, CounterexampleSampler>;

  static SamplerSpec discrete(DiscreteDistribution law) {
    return SamplerSpec(DiscreteSampler{std::move(law)});
  }
  static SamplerSpec gaussian_iso(Eigen::Index dim, double sigma, Vector mean) {
    require_dim(mean, dim);
    return SamplerSpec(GaussianIsoSampler{sigma, std::move(mean)});
  }
  static SamplerSpec gaussian_iso(Eigen::Index dim, double sigma) {
    if (dim < 1) throw ValidationError("GaussianIso: dim must be >= 1");
    return gaussian_iso(dim, sigma, Vector::Zero(dim));
  }
  static SamplerSpec uniform_box(Vector lower, Vector upper) {
    return SamplerSpec(UniformBoxSampler{std::move(lower), std::move(upper)});
  }
  static SamplerSpec counterexample(CounterexampleParams params) {
    return SamplerSpec(CounterexampleSampler{params});
  }

  explicit SamplerSpec(Variant v) : variant_(std::move(v)) {
    std::visit(
        [this](const auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, DiscreteSampler>) {
            dim_ = s.law.dim();
            double running = 0.0;
            for (double w : s.law.weights()) cumulative_.push_back(running += w);
          } else if constexpr (std::is_same_v<T, GaussianIsoSampler>) {
            if (!(s.sigma > 0.0) || !std::isfinite(s.sigma)) {
              throw ValidationError("GaussianIso: sigma must be > 0");
            }
            require_finite(s.mean, "GaussianIso mean");
            dim_ = s.mean.size();
          } else if constexpr (std::is_same_v<T, UniformBoxSampler>) {
            require_finite(s.lower, "UniformBox lower");
            require_finite(s.upper, "UniformBox upper");
            require_dim(s.upper, s.lower.size());
            if (!(s.lower.array() < s.upper.array()).all()) {
              throw ValidationError("UniformBox: lower must be < upper in every coordinate");
            }
            dim_ = s.lower.size();
          } else {
            dim_ = 1;
          }
        },
        variant_);
  }

  [[nodiscard]] Eigen::Index dim() const noexcept { return dim_; }
  [[nodiscard]] const Variant& variant() const noexcept { return variant_; }

  /// Writes one draw into `out` (resized to dim()).
  void draw(RandomStream& rng, Vector& out) const {
    out.resize(dim_);
    std::visit(
        [&](const auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, DiscreteSampler>) {
            const double u = rng.uniform();
            auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
            auto idx = static_cast<std::size_t>(it - cumulative_.begin());
            if (idx >= cumulative_.size()) idx = cumulative_.size() - 1;
            out = s.law.atoms()[idx];
          } else if constexpr (std::is_same_v<T, GaussianIsoSampler>) {
            for (Eigen::Index i = 0; i < dim_; ++i) out[i] = s.mean[i] + s.sigma * rng.normal();
          } else if constexpr (std::is_same_v<T, UniformBoxSampler>) {
            for (Eigen::Index i = 0; i < dim_; ++i) {
              out[i] = s.lower[i] + (s.upper[i] - s.lower[i]) * rng.uniform();
            }
          } else {
            out[0] = rng.uniform() < s.params.p() ? 1.0 : -s.params.M;
          }
        },
        variant_);
  }

 private:
  Variant variant_;
  Eigen::Index dim_ = 0;
  std::vector<double> cumulative_;
};

/// Samples per substream. Sample i is drawn from substream i / kChunkSize.
inline constexpr std::uint64_t kChunkSize = 4096;

struct McOptions {
  unsigned threads = 1;
};

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t n_samples = 0;
  std::uint64_t seed = 0;

  static McEstimate from(const RunningStats& stats, std::uint64_t seed) {
    return {stats.mean(), stats.standard_error(), stats.count(), seed};
  }
};

/// Deterministic i.i.d. draws.
inline std::vector<Vector> sample(const SamplerSpec& spec, std::uint64_t seed, std::uint64_t count) {
  if (count < 1) throw ValidationError("sample: count must be >= 1");
  std::vector<Vector> out(count);
  const std::uint64_t chunks = (count + kChunkSize - 1) / kChunkSize;
  for (std::uint64_t c = 0; c < chunks; ++c) {
    RandomStream rng(seed, c);
    const std::uint64_t end = std::min(count, (c + 1) * kChunkSize);
    for (std::uint64_t i = c * kChunkSize; i < end; ++i) spec.draw(rng, out[i]);
  }
  return out;
}

namespace detail {

/// Runs `per_sample(rng, accumulators)` for N samples split across substreams and
/// merges the per-chunk accumulators in chunk order.
template <std::size_t K, class PerSample>
std::array<RunningStats, K> run_chunked(std::uint64_t n, std::uint64_t seed, const McOptions& opt,
                                        PerSample&& per_sample) {
  const std::uint64_t chunks = (n + kChunkSize - 1) / kChunkSize;
  std::vector<std::array<RunningStats, K>> partial(chunks);
  parallel_for(chunks, opt.threads, [&](std::uint64_t c) {
    RandomStream rng(seed, c);
    const std::uint64_t count = std::min(n, (c + 1) * kChunkSize) - c * kChunkSize;
    for (std::uint64_t i = 0; i < count; ++i) per_sample(rng, partial[c]);
  });
  std::array<RunningStats, K> total{};
  for (const auto& p : partial) {
    for (std::size_t k = 0; k < K; ++k) total[k].merge(p[k]);
  }
  return total;
}

inline void require_samples(std::uint64_t n) {
  if (n < 100) throw ValidationError("Monte Carlo estimators need at least 100 samples");
}

}  // namespace detail

/// Estimates of E f(X-Y), E f(X+Y) and their paired difference from shared draws.
struct PairEstimates {
  McEstimate minus;
  McEstimate plus;
  McEstimate difference;  // f(X-Y) - f(X+Y)
};

template <ScalarField F>
PairEstimates mc_pair_estimates(F&& f, const SamplerSpec& spec, std::uint64_t n,
                                std::uint64_t seed, const McOptions& opt = {}) {
  detail::require_samples(n);
  const auto stats = detail::run_chunked<3>(n, seed, opt, [&](RandomStream& rng, auto& acc) {
    thread_local Vector x;
    thread_local Vector y;
    spec.draw(rng, x);
    spec.draw(rng, y);
    const double minus = f(Vector(x - y));
    const double plus = f(Vector(x + y));
    acc[0].add(minus);
    acc[1].add(plus);
    acc[2].add(minus - plus);
  });
  return {McEstimate::from(stats[0], seed), McEstimate::from(stats[1], seed),
          McEstimate::from(stats[2], seed)};
}

inline PairEstimates mc_pair_estimates(const NdfSpec& psi, const SamplerSpec& spec,
                                       std::uint64_t n, std::uint64_t seed,
                                       const McOptions& opt = {}) {
  if (psi.dim() != spec.dim()) {
    throw DimensionMismatch(static_cast<std::size_t>(psi.dim()), static_cast<std::size_t>(spec.dim()));
  }
  return mc_pair_estimates([&psi](const Vector& z) { return psi.evaluate_unchecked(z); }, spec, n,
                           seed, opt);
}

enum class VerdictKind { ConsistentHolds, ViolationDetected, Inconclusive };

inline const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::ConsistentHolds: return "ConsistentHolds";
    case VerdictKind::ViolationDetected: return "ViolationDetected";
    case VerdictKind::Inconclusive: return "Inconclusive";
  }
  return "?";
}

struct InequalityVerdict {
  VerdictKind kind;
  double z_score;  // mean(f(X-Y) - f(X+Y)) / paired stderr
  PairEstimates estimates;
};

inline constexpr double kDefaultZThreshold = 5.0;

/// Classifies the paired difference D = f(X-Y) - f(X+Y):
///   ViolationDetected  z > threshold
///   ConsistentHolds    mean(D) + threshold * stderr(D) <= 0
///   Inconclusive       otherwise
inline InequalityVerdict classify(const PairEstimates& est, double z_threshold) {
  const double mean = est.difference.mean;
  const double se = est.difference.std_error;
  double z = 0.0;
  if (se > 0.0) {
    z = mean / se;
  } else if (mean != 0.0) {
    z = mean > 0.0 ? std::numeric_limits<double>::infinity() : -std::numeric_limits<double>::infinity();
  }
  VerdictKind kind = VerdictKind::Inconclusive;
  if (z > z_threshold) {
    kind = VerdictKind::ViolationDetected;
  } else if (mean + z_threshold * se <= 0.0) {
    kind = VerdictKind::ConsistentHolds;
  }
  return {kind, z, est};
}

template <class F>
InequalityVerdict mc_inequality_verdict(F&& f, const SamplerSpec& spec, std::uint64_t n,
                                        std::uint64_t seed, double z_threshold = kDefaultZThreshold,
                                        const McOptions& opt = {}) {
  return classify(mc_pair_estimates(std::forward<F>(f), spec, n, seed, opt), z_threshold);
}

struct SignedSumEstimates {
  McEstimate signed_sum;  // f(sum eps_j X_j)
  McEstimate all_plus;    // f(sum X_j)
  McEstimate difference;  // all_plus - signed
};

template <ScalarField F>
SignedSumEstimates mc_signed_sum(F&& f, const SamplerSpec& spec, const SignPattern& pattern,
                                 std::uint64_t n, std::uint64_t seed, const McOptions& opt = {}) {
  detail::require_samples(n);
  const auto& eps = pattern.signs();
  const auto stats = detail::run_chunked<3>(n, seed, opt, [&](RandomStream& rng, auto& acc) {
    thread_local Vector x;
    Vector s_signed = Vector::Zero(spec.dim());
    Vector s_plus = Vector::Zero(spec.dim());
    for (int e : eps) {
      spec.draw(rng, x);
      s_plus += x;
      if (e > 0) {
        s_signed += x;
      } else {
        s_signed -= x;
      }
    }
    const double signed_value = f(s_signed);
    const double plus_value = f(s_plus);
    acc[0].add(signed_value);
    acc[1].add(plus_value);
    acc[2].add(plus_value - signed_value);
  });
  return {McEstimate::from(stats[0], seed), McEstimate::from(stats[1], seed),
          McEstimate::from(stats[2], seed)};
}

inline SignedSumEstimates mc_signed_sum(const NdfSpec& psi, const SamplerSpec& spec,
                                        const SignPattern& pattern, std::uint64_t n,
                                        std::uint64_t seed, const McOptions& opt = {}) {
  if (psi.dim() != spec.dim()) {
    throw DimensionMismatch(static_cast<std::size_t>(psi.dim()), static_cast<std::size_t>(spec.dim()));
  }
  return mc_signed_sum([&psi](const Vector& z) { return psi.evaluate_unchecked(z); }, spec, pattern,
                       n, seed, opt);
}

}  // namespace ndf
