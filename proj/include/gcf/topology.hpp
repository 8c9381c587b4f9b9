#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gcf/mesh.hpp"

namespace gcf {

/// Per-vertex connectivity derived from a TriangleMesh.
///
/// For a manifold vertex, `ring(i)` lists the 1-ring cyclically: consecutive
/// entries share an incident face with i. Interior rings wrap around; boundary
/// rings are open chains whose endpoints sit on boundary edges. Where faces are
/// consistently wound the ring follows the winding. For a non-manifold vertex
/// (its faces do not form one fan) the ring is the sorted set of adjacent
/// vertices and carries no cyclic meaning.
///
/// Storage is CSR-style; the object is immutable once built.
class MeshTopology {
 public:
  MeshTopology() = default;

  std::size_t vertexCount() const noexcept { return isBoundary_.size(); }

  std::span<const VertexIndex> ring(std::size_t v) const {
    return {ringData_.data() + ringOffsets_[v], ringOffsets_[v + 1] - ringOffsets_[v]};
  }
  std::span<const std::uint32_t> vertexFaces(std::size_t v) const {
    return {faceData_.data() + faceOffsets_[v], faceOffsets_[v + 1] - faceOffsets_[v]};
  }

  bool isBoundary(std::size_t v) const { return isBoundary_[v] != 0; }
  bool isManifoldFan(std::size_t v) const { return isManifold_[v] != 0; }
  /// Manifold, closed fan: the only vertices the filter moves.
  bool isInterior(std::size_t v) const { return isManifold_[v] != 0 && isBoundary_[v] == 0; }

  std::size_t maxDegree() const noexcept { return maxDegree_; }
  std::size_t boundaryVertexCount() const;
  std::size_t nonManifoldVertexCount() const;

  friend MeshTopology buildTopology(const TriangleMesh& mesh);

 private:
  std::vector<std::size_t> ringOffsets_{0};
  std::vector<VertexIndex> ringData_;
  std::vector<std::size_t> faceOffsets_{0};
  std::vector<std::uint32_t> faceData_;
  std::vector<std::uint8_t> isBoundary_;
  std::vector<std::uint8_t> isManifold_;
  std::size_t maxDegree_ = 0;
};

/// Walks face adjacency around every vertex. Non-manifold fans are flagged, not rejected.
MeshTopology buildTopology(const TriangleMesh& mesh);

}  // namespace gcf
