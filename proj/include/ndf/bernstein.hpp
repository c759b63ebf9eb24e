#pragma once

#include <cmath>
#include <string>
#include <variant>
#include <vector>

#include "ndf/errors.hpp"

namespace ndf {

struct BernsteinAtom {
  double t;  // location on (0, inf)
  double w;  // mass
};

/// f(l) = a + b*l + sum_k (1 - exp(-t_k l)) w_k
struct BernsteinTriplet {
  double a = 0.0;
  double b = 0.0;
  std::vector<BernsteinAtom> atoms;
};

/// f(l) = l^beta, 0 < beta <= 1
struct PowerBernstein {
  double beta = 1.0;
};

/// f(l) = log(1 + l)
struct Log1pBernstein {};

/// Symbolic Bernstein function. Construction validates the parameters.
class BernsteinSpec {
 public:
  using Variant = std::variant<BernsteinTriplet, PowerBernstein, Log1pBernstein>;

  static BernsteinSpec triplet(double a, double b, std::vector<BernsteinAtom> atoms = {}) {
    return BernsteinSpec(BernsteinTriplet{a, b, std::move(atoms)});
  }
  static BernsteinSpec power(double beta) { return BernsteinSpec(PowerBernstein{beta}); }
  static BernsteinSpec log1p() { return BernsteinSpec(Log1pBernstein{}); }

  explicit BernsteinSpec(Variant v) : variant_(std::move(v)) { validate(); }

  [[nodiscard]] const Variant& variant() const noexcept { return variant_; }

  /// Value at zero; a killing term for the triplet form, 0 otherwise.
  [[nodiscard]] double at_zero() const noexcept {
    if (const auto* t = std::get_if<BernsteinTriplet>(&variant_)) return t->a;
    return 0.0;
  }

  [[nodiscard]] double operator()(double lambda) const {
    if (!(lambda >= 0.0)) {
      throw DomainError("Bernstein function evaluated at negative or NaN argument " +
                        std::to_string(lambda));
    }
    return std::visit(
        [lambda](const auto& f) -> double {
          using T = std::decay_t<decltype(f)>;
          if constexpr (std::is_same_v<T, BernsteinTriplet>) {
            double value = f.a + f.b * lambda;
            for (const auto& atom : f.atoms) value += -std::expm1(-atom.t * lambda) * atom.w;
            return value;
          } else if constexpr (std::is_same_v<T, PowerBernstein>) {
            if (f.beta == 1.0) return lambda;
            return std::pow(lambda, f.beta);
          } else {
            return std::log1p(lambda);
          }
        },
        variant_);
  }

 private:
  void validate() const {
    std::visit(
        [](const auto& f) {
          using T = std::decay_t<decltype(f)>;
          if constexpr (std::is_same_v<T, BernsteinTriplet>) {
            if (!(f.a >= 0.0) || !std::isfinite(f.a)) throw ValidationError("Bernstein: a must be >= 0");
            if (!(f.b >= 0.0) || !std::isfinite(f.b)) throw ValidationError("Bernstein: b must be >= 0");
            for (const auto& atom : f.atoms) {
              if (!(atom.t > 0.0) || !std::isfinite(atom.t)) {
                throw ValidationError("Bernstein: atom location t must be > 0");
              }
              if (!(atom.w > 0.0) || !std::isfinite(atom.w)) {
                throw ValidationError("Bernstein: atom mass w must be > 0");
              }
            }
          } else if constexpr (std::is_same_v<T, PowerBernstein>) {
            if (!(f.beta > 0.0 && f.beta <= 1.0)) {
              throw ValidationError("Bernstein: power beta must lie in (0, 1]");
            }
          }
        },
        variant_);
  }

  Variant variant_;
};

inline double eval_bernstein(const BernsteinSpec& f, double lambda) { return f(lambda); }

}  // namespace ndf
