#include "gcf/smoothing.hpp"

#include <string>

#include "gcf/errors.hpp"

namespace gcf {

namespace {

void umbrellaPass(std::vector<Vec3>& positions, std::vector<Vec3>& scratch, const MeshTopology& topology,
                  double factor) {
  scratch = positions;
  for (std::size_t v = 0; v < positions.size(); ++v) {
    if (!topology.isInterior(v)) continue;
    const auto ring = topology.ring(v);
    Vec3 sum;
    for (VertexIndex u : ring) sum += scratch[u];
    const double m = static_cast<double>(ring.size());
    const Vec3 centroid{sum.x / m, sum.y / m, sum.z / m};
    positions[v] = scratch[v] + (centroid - scratch[v]) * factor;
  }
}

void requireIterations(int iterations) {
  if (iterations < 0) throw InvalidArgument("iteration count must be non-negative, got " + std::to_string(iterations));
}

}  // namespace

TriangleMesh laplacianSmooth(const TriangleMesh& mesh, const MeshTopology& topology, const LaplacianParams& params) {
  requireIterations(params.iterations);
  if (!(params.lambda >= 0.0 && params.lambda <= 1.0)) throw InvalidArgument("Laplacian lambda must lie in [0, 1]");
  TriangleMesh out = mesh;
  if (params.lambda == 0.0) return out;
  std::vector<Vec3> scratch;
  for (int it = 0; it < params.iterations; ++it) umbrellaPass(out.vertices, scratch, topology, params.lambda);
  return out;
}

TriangleMesh taubinSmooth(const TriangleMesh& mesh, const MeshTopology& topology, const TaubinParams& params) {
  requireIterations(params.iterations);
  if (!(params.lambda > 0.0 && params.lambda <= 1.0)) throw InvalidArgument("Taubin lambda must lie in (0, 1]");
  if (!(params.mu == 0.0 || params.mu < -params.lambda)) {
    throw InvalidArgument("Taubin mu must be 0 or below -lambda");
  }
  TriangleMesh out = mesh;
  std::vector<Vec3> scratch;
  for (int it = 0; it < params.iterations; ++it) {
    umbrellaPass(out.vertices, scratch, topology, params.lambda);
    if (params.mu != 0.0) umbrellaPass(out.vertices, scratch, topology, params.mu);
  }
  return out;
}

}  // namespace gcf
