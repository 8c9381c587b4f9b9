#include "gcf/noise.hpp"

#include <cmath>
#include <numbers>

#include "gcf/curvature.hpp"
#include "gcf/errors.hpp"

namespace gcf {

double GaussianSource::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double GaussianSource::next() {
  if (hasSpare_) {
    hasSpare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]: keeps log finite
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  hasSpare_ = true;
  return r * std::cos(theta);
}

TriangleMesh addNoise(const TriangleMesh& mesh, const MeshTopology& topology, const NoiseConfig& config) {
  if (!(config.sigmaFactor >= 0.0)) throw InvalidArgument("noise sigma factor must be non-negative");
  TriangleMesh out = mesh;
  if (config.sigmaFactor == 0.0 || mesh.faces.empty()) return out;

  const double sigma = config.sigmaFactor * meanEdgeLength(mesh);
  GaussianSource gauss(config.seed);
  if (config.mode == NoiseMode::AlongNormal) {
    const VertexNormals normals = vertexNormals(mesh, topology);
    for (std::size_t v = 0; v < out.vertexCount(); ++v) {
      const double offset = sigma * gauss.next();
      if (!normals.degenerate[v]) out.vertices[v] += normals.normals[v] * offset;
    }
  } else {
    for (Vec3& p : out.vertices) {
      const double dx = gauss.next();
      const double dy = gauss.next();
      const double dz = gauss.next();
      p += Vec3{dx, dy, dz} * sigma;
    }
  }
  return out;
}

}  // namespace gcf
