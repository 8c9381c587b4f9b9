#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "gcf/vec3.hpp"

namespace gcf {

using VertexIndex = std::uint32_t;
using Face = std::array<VertexIndex, 3>;

/// Vertex positions plus triangle index triples (0-based).
struct TriangleMesh {
  std::vector<Vec3> vertices;
  std::vector<Face> faces;

  std::size_t vertexCount() const noexcept { return vertices.size(); }
  std::size_t faceCount() const noexcept { return faces.size(); }

  /// Throws IndexError if a face references a missing vertex or repeats an index.
  void validate() const;

  friend bool operator==(const TriangleMesh&, const TriangleMesh&) = default;
};

struct MeshStats {
  double meanEdgeLength = 0.0;
  std::size_t vertexCount = 0;
  std::size_t faceCount = 0;
  std::size_t edgeCount = 0;
  std::size_t boundaryVertexCount = 0;
};

/// Unique undirected edges, each stored once with the smaller index first, sorted.
std::vector<std::array<VertexIndex, 2>> uniqueEdges(const TriangleMesh& mesh);

/// Mean length over unique undirected edges. Throws EmptyMesh when there are no faces.
double meanEdgeLength(const TriangleMesh& mesh);

MeshStats meshStats(const TriangleMesh& mesh);

}  // namespace gcf
