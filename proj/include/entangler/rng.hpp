#pragma once

#include "entangler/linalg.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace entangler::rng {

/// SplitMix64 mixing step. Used to derive independent sub-seeds from a
/// master seed and a (stream, index) pair, so parallel and serial runs
/// consume identical random streams.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                                 std::uint64_t index) {
  return mix64(mix64(master + 0x6a09e667f3bcc909ULL * (stream + 1)) + index);
}

/// Deterministic random source. The engine is std::mt19937_64 (fully
/// specified by the standard); floating-point draws avoid std::*_distribution
/// because those are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller; the paired draw is cached.
  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

  linalg::Complex complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return {re, im};
  }

  /// Haar-uniform point on the complex unit sphere in C^dim.
  linalg::Vector unit_vector(Eigen::Index dim) {
    linalg::Vector v(dim);
    double norm2 = 0.0;
    do {
      for (Eigen::Index i = 0; i < dim; ++i) v[i] = complex_gaussian();
      norm2 = v.squaredNorm();
    } while (norm2 == 0.0);
    return v / std::sqrt(norm2);
  }

  /// Matrix of independent standard complex Gaussians.
  linalg::Matrix ginibre(Eigen::Index rows, Eigen::Index cols) {
    linalg::Matrix g(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index j = 0; j < cols; ++j) g(i, j) = complex_gaussian();
    return g;
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Named sub-streams so independent consumers of one master seed never
/// collide.
enum class Stream : std::uint64_t {
  kRestart = 1,
  kStudyUnitary = 2,
  kStudyEstimate = 3,
  kCandidateUnitary = 4,
  kCandidateEstimate = 5,
  kHillProposal = 6,
  kHillEstimate = 7,
  kFinalEstimate = 8,
};

inline std::uint64_t derive_seed(std::uint64_t master, Stream stream,
                                 std::uint64_t index) {
  return derive_seed(master, static_cast<std::uint64_t>(stream), index);
}

}  // namespace entangler::rng
