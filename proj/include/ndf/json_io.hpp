#pragma once

// Canonical JSON encodings. Objects are tagged unions with a "variant" field;
// nlohmann::json keeps keys sorted, so dump() of an encoded value is canonical.

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "ndf/bernstein.hpp"
#include "ndf/distributions.hpp"
#include "ndf/errors.hpp"
#include "ndf/linalg.hpp"
#include "ndf/mc_engine.hpp"
#include "ndf/ndf_spec.hpp"
#include "ndf/rng.hpp"

namespace ndf::json_io {

using nlohmann::json;

/// Decoding failure carrying the JSON path of the offending field.
class DecodeError : public ValidationError {
 public:
  DecodeError(const std::string& path, const std::string& message)
      : ValidationError(path + ": " + message), path_(path) {}
  [[nodiscard]] const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

namespace detail {

inline const json& field(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw DecodeError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw DecodeError(path + "." + key, "missing field");
  return *it;
}

inline double number(const json& j, const std::string& path) {
  if (!j.is_number()) throw DecodeError(path, "expected a number");
  return j.get<double>();
}

inline std::int64_t integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw DecodeError(path, "expected an integer");
  return j.get<std::int64_t>();
}

inline std::string variant_tag(const json& obj, const std::string& path) {
  const auto& v = field(obj, "variant", path);
  if (!v.is_string()) throw DecodeError(path + ".variant", "expected a string");
  return v.get<std::string>();
}

/// Rejects keys outside `allowed`.
inline void only(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) throw DecodeError(path, "expected an object");
  for (const auto& [key, _] : obj.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&key](const char* a) { return key == a; })) {
      throw DecodeError(path + "." + key, "unknown field");
    }
  }
}

/// Runs `fn`, re-tagging library validation errors with `path`.
template <class Fn>
auto at(const std::string& path, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const DecodeError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw DecodeError(path, e.what());
  } catch (const std::domain_error& e) {
    throw DecodeError(path, e.what());
  }
}

}  // namespace detail

inline json encode(const Vector& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

inline Vector decode_vector(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) throw DecodeError(path, "expected a nonempty array of numbers");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v[static_cast<Eigen::Index>(i)] = detail::number(j[i], path + "[" + std::to_string(i) + "]");
  }
  return v;
}

inline json encode(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Matrix decode_matrix(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) throw DecodeError(path, "expected a nonempty array of rows");
  const auto n = j.size();
  Matrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(j[0].is_array() ? j[0].size() : 0));
  for (std::size_t i = 0; i < n; ++i) {
    const auto row_path = path + "[" + std::to_string(i) + "]";
    const Vector row = decode_vector(j[i], row_path);
    if (row.size() != m.cols()) throw DecodeError(row_path, "rows must have equal length");
    m.row(static_cast<Eigen::Index>(i)) = row.transpose();
  }
  return m;
}

// --- BernsteinSpec ---------------------------------------------------------

inline json encode(const BernsteinSpec& f) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, BernsteinTriplet>) {
          json atoms = json::array();
          for (const auto& a : v.atoms) atoms.push_back({{"t", a.t}, {"w", a.w}});
          return {{"variant", "Triplet"}, {"a", v.a}, {"b", v.b}, {"atoms", atoms}};
        } else if constexpr (std::is_same_v<T, PowerBernstein>) {
          return {{"variant", "Power"}, {"beta", v.beta}};
        } else {
          return {{"variant", "Log1p"}};
        }
      },
      f.variant());
}

inline BernsteinSpec decode_bernstein(const json& j, const std::string& path) {
  using detail::field;
  using detail::number;
  const auto tag = detail::variant_tag(j, path);
  if (tag == "Triplet") {
    detail::only(j, path, {"variant", "a", "b", "atoms"});
    std::vector<BernsteinAtom> atoms;
    if (j.contains("atoms")) {
      const auto& arr = j["atoms"];
      if (!arr.is_array()) throw DecodeError(path + ".atoms", "expected an array");
      for (std::size_t i = 0; i < arr.size(); ++i) {
        const auto p = path + ".atoms[" + std::to_string(i) + "]";
        detail::only(arr[i], p, {"t", "w"});
        atoms.push_back({number(field(arr[i], "t", p), p + ".t"), number(field(arr[i], "w", p), p + ".w")});
      }
    }
    const double a = number(field(j, "a", path), path + ".a");
    const double b = number(field(j, "b", path), path + ".b");
    return detail::at(path, [&] { return BernsteinSpec::triplet(a, b, std::move(atoms)); });
  }
  if (tag == "Power") {
    detail::only(j, path, {"variant", "beta"});
    const double beta = number(field(j, "beta", path), path + ".beta");
    return detail::at(path, [&] { return BernsteinSpec::power(beta); });
  }
  if (tag == "Log1p") {
    detail::only(j, path, {"variant"});
    return BernsteinSpec::log1p();
  }
  throw DecodeError(path + ".variant", "unknown Bernstein variant '" + tag + "'");
}

// --- NdfSpec ---------------------------------------------------------------

inline json encode(const NdfSpec& psi) {
  const auto dim = psi.dim();
  return std::visit(
      [dim](const auto& n) -> json {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, FromTriplet>) {
          json atoms = json::array();
          for (const auto& a : n.triplet.atoms) atoms.push_back({{"u", encode(a.u)}, {"m", a.m}});
          json triplet = {{"a", n.triplet.a}, {"Q", encode(n.triplet.Q)}, {"atoms", atoms}};
          return {{"variant", "FromTriplet"}, {"dim", dim}, {"triplet", triplet}};
        } else if constexpr (std::is_same_v<T, EuclideanPower>) {
          return {{"variant", "EuclideanPower"}, {"dim", dim}, {"alpha", n.alpha}};
        } else if constexpr (std::is_same_v<T, Subordinated>) {
          return {{"variant", "Subordinated"}, {"dim", dim}, {"f", encode(n.f)}, {"inner", encode(n.inner)}};
        } else {
          json terms = json::array();
          for (const auto& t : n.terms) terms.push_back({{"c", t.c}, {"term", encode(t.term)}});
          return {{"variant", "ConicSum"}, {"dim", dim}, {"terms", terms}};
        }
      },
      psi.node());
}

inline NdfSpec decode_ndf(const json& j, const std::string& path = "psi") {
  using detail::field;
  using detail::number;
  const auto tag = detail::variant_tag(j, path);
  std::optional<Eigen::Index> dim;
  if (j.contains("dim")) {
    const auto d = detail::integer(j["dim"], path + ".dim");
    if (d < 1) throw DecodeError(path + ".dim", "must be >= 1");
    dim = static_cast<Eigen::Index>(d);
  }
  const auto check_dim = [&](const NdfSpec& spec) {
    if (dim && *dim != spec.dim()) {
      throw DecodeError(path + ".dim", "declared " + std::to_string(*dim) + " but content has dimension " +
                                           std::to_string(spec.dim()));
    }
    return spec;
  };

  if (tag == "FromTriplet") {
    const auto tp = path + ".triplet";
    detail::only(j, path, {"variant", "dim", "triplet"});
    const auto& t = field(j, "triplet", path);
    detail::only(t, tp, {"a", "Q", "atoms"});
    LevyTriplet triplet;
    if (t.contains("a") && number(t["a"], tp + ".a") != 0.0) {
      throw DecodeError(tp + ".a", "killing term must be 0 for a negative definite function");
    }
    triplet.Q = decode_matrix(field(t, "Q", tp), tp + ".Q");
    if (t.contains("atoms")) {
      const auto& arr = t["atoms"];
      if (!arr.is_array()) throw DecodeError(tp + ".atoms", "expected an array");
      for (std::size_t i = 0; i < arr.size(); ++i) {
        const auto p = tp + ".atoms[" + std::to_string(i) + "]";
        detail::only(arr[i], p, {"u", "m"});
        triplet.atoms.push_back({decode_vector(field(arr[i], "u", p), p + ".u"),
                                 number(field(arr[i], "m", p), p + ".m")});
      }
    }
    return check_dim(detail::at(path, [&] { return NdfSpec::from_triplet(std::move(triplet)); }));
  }
  if (tag == "EuclideanPower") {
    detail::only(j, path, {"variant", "dim", "alpha"});
    if (!dim) throw DecodeError(path + ".dim", "missing field");
    const double alpha = number(field(j, "alpha", path), path + ".alpha");
    return detail::at(path, [&] { return NdfSpec::euclidean_power(alpha, *dim); });
  }
  if (tag == "Subordinated") {
    detail::only(j, path, {"variant", "dim", "f", "inner"});
    auto f = decode_bernstein(field(j, "f", path), path + ".f");
    auto inner = decode_ndf(field(j, "inner", path), path + ".inner");
    return check_dim(detail::at(path, [&] { return NdfSpec::subordinated(std::move(f), std::move(inner)); }));
  }
  if (tag == "ConicSum") {
    detail::only(j, path, {"variant", "dim", "terms"});
    const auto& arr = field(j, "terms", path);
    if (!arr.is_array() || arr.empty()) throw DecodeError(path + ".terms", "expected a nonempty array");
    std::vector<std::pair<double, NdfSpec>> terms;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const auto p = path + ".terms[" + std::to_string(i) + "]";
      detail::only(arr[i], p, {"c", "term"});
      terms.emplace_back(number(field(arr[i], "c", p), p + ".c"), decode_ndf(field(arr[i], "term", p), p + ".term"));
    }
    return check_dim(detail::at(path, [&] { return NdfSpec::conic_sum(std::move(terms)); }));
  }
  throw DecodeError(path + ".variant", "unknown NdfSpec variant '" + tag + "'");
}

// --- DiscreteDistribution --------------------------------------------------

inline json encode(const DiscreteDistribution& law) {
  json atoms = json::array();
  for (const auto& a : law.atoms()) atoms.push_back(encode(a));
  return {{"atoms", atoms}, {"weights", law.weights()}};
}

inline DiscreteDistribution decode_distribution(const json& j, const std::string& path = "distribution") {
  detail::only(j, path, {"atoms", "weights"});
  const auto& atoms_j = detail::field(j, "atoms", path);
  const auto& weights_j = detail::field(j, "weights", path);
  if (!atoms_j.is_array()) throw DecodeError(path + ".atoms", "expected an array");
  if (!weights_j.is_array()) throw DecodeError(path + ".weights", "expected an array");
  std::vector<Vector> atoms;
  for (std::size_t i = 0; i < atoms_j.size(); ++i) {
    const auto p = path + ".atoms[" + std::to_string(i) + "]";
    // Scalars are accepted as one-dimensional atoms.
    atoms.push_back(atoms_j[i].is_number() ? Vector::Constant(1, atoms_j[i].get<double>())
                                           : decode_vector(atoms_j[i], p));
  }
  std::vector<double> weights;
  for (std::size_t i = 0; i < weights_j.size(); ++i) {
    weights.push_back(detail::number(weights_j[i], path + ".weights[" + std::to_string(i) + "]"));
  }
  return detail::at(path, [&] { return DiscreteDistribution(std::move(atoms), std::move(weights)); });
}

// --- CounterexampleParams / SamplerSpec -------------------------------------

inline json encode(const CounterexampleParams& p) {
  return {{"alpha", p.alpha}, {"c", p.c}, {"M", p.M}};
}

inline CounterexampleParams decode_counterexample(const json& j, const std::string& path) {
  const double alpha = detail::number(detail::field(j, "alpha", path), path + ".alpha");
  const double c = detail::number(detail::field(j, "c", path), path + ".c");
  const double m = detail::number(detail::field(j, "M", path), path + ".M");
  return detail::at(path, [&] { return CounterexampleParams(alpha, c, m); });
}

inline json encode(const SamplerSpec& spec) {
  const auto dim = spec.dim();
  return std::visit(
      [dim](const auto& s) -> json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, DiscreteSampler>) {
          return {{"variant", "Discrete"}, {"distribution", encode(s.law)}};
        } else if constexpr (std::is_same_v<T, GaussianIsoSampler>) {
          return {{"variant", "GaussianIso"}, {"dim", dim}, {"sigma", s.sigma}, {"mean", encode(s.mean)}};
        } else if constexpr (std::is_same_v<T, UniformBoxSampler>) {
          return {{"variant", "UniformBox"}, {"lower", encode(s.lower)}, {"upper", encode(s.upper)}};
        } else {
          json j = encode(s.params);
          j["variant"] = "Counterexample";
          return j;
        }
      },
      spec.variant());
}

inline SamplerSpec decode_sampler(const json& j, const std::string& path = "sampler") {
  using detail::field;
  const auto tag = detail::variant_tag(j, path);
  if (tag == "Discrete") {
    detail::only(j, path, {"variant", "distribution"});
    auto law = decode_distribution(field(j, "distribution", path), path + ".distribution");
    return SamplerSpec::discrete(std::move(law));
  }
  if (tag == "GaussianIso") {
    detail::only(j, path, {"variant", "dim", "sigma", "mean"});
    const auto d = detail::integer(field(j, "dim", path), path + ".dim");
    if (d < 1) throw DecodeError(path + ".dim", "must be >= 1");
    const double sigma = detail::number(field(j, "sigma", path), path + ".sigma");
    Vector mean = j.contains("mean") ? decode_vector(j["mean"], path + ".mean")
                                     : Vector::Zero(static_cast<Eigen::Index>(d));
    return detail::at(path, [&] { return SamplerSpec::gaussian_iso(static_cast<Eigen::Index>(d), sigma, mean); });
  }
  if (tag == "UniformBox") {
    detail::only(j, path, {"variant", "lower", "upper"});
    Vector lower = decode_vector(field(j, "lower", path), path + ".lower");
    Vector upper = decode_vector(field(j, "upper", path), path + ".upper");
    return detail::at(path, [&] { return SamplerSpec::uniform_box(lower, upper); });
  }
  if (tag == "Counterexample") {
    detail::only(j, path, {"variant", "alpha", "c", "M"});
    return SamplerSpec::counterexample(decode_counterexample(j, path));
  }
  throw DecodeError(path + ".variant", "unknown sampler variant '" + tag + "'");
}

/// Seeds: JSON unsigned integers, or decimal / 0x-hex strings.
inline std::uint64_t decode_seed(const json& j, const std::string& path) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer()) {
    if (j.get<std::int64_t>() < 0) throw DecodeError(path, "seed must be nonnegative");
    return static_cast<std::uint64_t>(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    try {
      return parse_seed(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw DecodeError(path, e.what());
    }
  }
  throw DecodeError(path, "expected an unsigned integer or a decimal/0x-hex string");
}

}  // namespace ndf::json_io
