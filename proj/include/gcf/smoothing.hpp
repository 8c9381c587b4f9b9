#pragma once

#include "gcf/mesh.hpp"
#include "gcf/topology.hpp"

namespace gcf {

// Umbrella-operator baselines. Each pass moves every interior vertex by
// factor * (centroid(ring) - v), all vertices reading the previous pass;
// boundary and non-manifold vertices stay fixed.

struct LaplacianParams {
  int iterations = 10;
  double lambda = 0.5;  // in [0, 1]; 0 is the identity
};

struct TaubinParams {
  int iterations = 10;
  double lambda = 0.5;  // > 0
  double mu = -0.53;    // < -lambda, or exactly 0 (plain Laplacian)
};

TriangleMesh laplacianSmooth(const TriangleMesh& mesh, const MeshTopology& topology, const LaplacianParams& params = {});

/// One lambda pass followed by one mu pass per iteration.
TriangleMesh taubinSmooth(const TriangleMesh& mesh, const MeshTopology& topology, const TaubinParams& params = {});

}  // namespace gcf
