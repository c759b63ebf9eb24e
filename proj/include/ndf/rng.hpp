#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>

namespace ndf {

inline constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Seed of substream `stream` under master seed `seed`; a pure function of both.
inline constexpr std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  return splitmix64(splitmix64(seed) ^ splitmix64(~stream));
}

/// One reproducible substream: mt19937_64 seeded by stream_seed(seed, stream).
///
/// Uniforms take the top 53 bits of each draw. Normals use the Box-Muller
/// transform with u1 = 1 - U in (0, 1], emitting the cosine branch first and
/// caching the sine branch.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t stream) : engine_(stream_seed(seed, stream)) {}

  /// Uniform on [0, 1).
  double uniform() noexcept { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double normal() {
    if (spare_) {
      const double z = *spare_;
      spare_.reset();
      return z;
    }
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    return r * std::cos(theta);
  }

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

/// Accepts decimal or 0x-prefixed hexadecimal.
inline std::uint64_t parse_seed(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty seed");
  std::size_t pos = 0;
  std::uint64_t value = 0;
  try {
    if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
      value = std::stoull(text.substr(2), &pos, 16);
      pos += 2;
    } else {
      if (text[0] == '-' || text[0] == '+') throw std::invalid_argument("sign");
      value = std::stoull(text, &pos, 10);
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("invalid seed '" + text + "'");
  }
  if (pos != text.size()) throw std::invalid_argument("invalid seed '" + text + "'");
  return value;
}

}  // namespace ndf
