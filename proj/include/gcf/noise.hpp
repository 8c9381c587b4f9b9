#pragma once

#include <cstdint>
#include <random>

#include "gcf/mesh.hpp"
#include "gcf/topology.hpp"

namespace gcf {

enum class NoiseMode { AlongNormal, Isotropic };

struct NoiseConfig {
  double sigmaFactor = 0.3;  // standard deviation as a multiple of the mean edge length
  std::uint64_t seed = 42;
  NoiseMode mode = NoiseMode::AlongNormal;
};

/// Standard normal samples from a fixed, documented pipeline:
///   std::mt19937_64(seed)            (sequence fixed by the C++ standard)
///   -> u = (word >> 11) * 2^-53      (uniform in [0, 1))
///   -> Box-Muller on (1 - u1, u2), both outputs used, cosine branch first.
class GaussianSource {
 public:
  explicit GaussianSource(std::uint64_t seed) : engine_(seed) {}
  double next();

 private:
  double uniform();

  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool hasSpare_ = false;
};

/// Zero-mean Gaussian displacement with sigma = sigmaFactor * mean edge length.
/// AlongNormal offsets each vertex along its area-weighted normal (one sample per
/// vertex, in index order); Isotropic draws x, y, z samples per vertex.
/// Throws InvalidArgument for a negative sigmaFactor.
TriangleMesh addNoise(const TriangleMesh& mesh, const MeshTopology& topology, const NoiseConfig& config);

}  // namespace gcf
