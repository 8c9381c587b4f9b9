#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gcf/mesh.hpp"
#include "gcf/topology.hpp"

namespace gcf {

/// Vertex partition into color classes ("domains"). Vertices sharing a label
/// are never adjacent when the coloring is proper, so a domain can be updated
/// in parallel while its neighbors stay put.
struct DomainColoring {
  std::vector<std::uint32_t> colorOf;
  std::vector<std::vector<VertexIndex>> domains;  // ascending vertex order within each

  std::size_t domainCount() const noexcept { return domains.size(); }

  /// Every vertex in one domain: the Jacobi variant used as a baseline.
  static DomainColoring singleDomain(std::size_t vertexCount);
};

/// Greedy coloring in ascending vertex order, smallest color absent among
/// already-colored neighbors. Deterministic; uses at most maxDegree + 1 colors.
DomainColoring greedyDomainDecomposition(const MeshTopology& topology);

/// True iff no edge of the topology joins two vertices of the same color.
bool isProperColoring(const DomainColoring& coloring, const MeshTopology& topology);

}  // namespace gcf
