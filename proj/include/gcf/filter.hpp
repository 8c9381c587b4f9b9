#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gcf/coloring.hpp"
#include "gcf/mesh.hpp"
#include "gcf/topology.hpp"

namespace gcf {

struct FilterConfig {
  int iterations = 1;       // the filter's only parameter; must be >= 1
  unsigned threads = 0;     // 0 = let the scheduler decide
  bool captureTrace = false;
};

/// Interior Gaussian curvature energy before the first step and after each step.
struct FilterTrace {
  std::vector<double> gcePerIteration;
};

struct FilterResult {
  TriangleMesh mesh;
  std::optional<FilterTrace> trace;
};

// Per-vertex building blocks. `scale` is the mesh's mean edge length; the
// degeneracy thresholds are 1e-14 * scale for lengths and 1e-14 * scale^2 for
// cross-product magnitudes.

/// -(v - centroid(ring)) normalized, or nullopt when v already sits at the centroid.
std::optional<Vec3> movingDirection(std::size_t vertex, std::span<const Vec3> positions, const MeshTopology& topology,
                                    double scale);

/// Unit normal at the k-th ring neighbor of `vertex`, from the cross product of
/// the edges to its cyclic predecessor and successor in that ring. nullopt if the
/// three points are collinear or the neighbor has no predecessor/successor.
std::optional<Vec3> neighborNormal(std::size_t vertex, std::size_t k, std::span<const Vec3> positions,
                                   const MeshTopology& topology, double scale);

/// Area-weighted normal of `vertex` from its ring wedges at the current positions.
std::optional<Vec3> ringVertexNormal(std::size_t vertex, std::span<const Vec3> positions, const MeshTopology& topology);

/// Smallest |<n, v_k - v>| over n in {vertexNormal} + neighbor normals and all
/// ring edges. nullopt when every normal is degenerate.
std::optional<double> minProjectionDistance(std::size_t vertex, std::span<const Vec3> positions,
                                            const MeshTopology& topology, std::optional<Vec3> vertexNormal,
                                            double scale);

/// Filtered position of one vertex given the current positions. Boundary,
/// non-manifold and degenerate vertices come back unchanged.
Vec3 filteredPosition(std::size_t vertex, std::span<const Vec3> positions, const MeshTopology& topology,
                      double scale);

/// One sweep over the domains in ascending label order. Within a domain every
/// vertex reads the positions as they stood when the domain pass began; results
/// are committed before the next domain starts.
void gcfStep(std::span<Vec3> positions, const MeshTopology& topology, const DomainColoring& coloring, double scale,
             unsigned threads = 1);

/// Runs config.iterations steps. Throws InvalidArgument when iterations < 1.
FilterResult gcfFilter(const TriangleMesh& mesh, const MeshTopology& topology, const DomainColoring& coloring,
                       const FilterConfig& config);

}  // namespace gcf
