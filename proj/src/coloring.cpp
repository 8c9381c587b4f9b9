#include "gcf/coloring.hpp"

#include <limits>

namespace gcf {

DomainColoring DomainColoring::singleDomain(std::size_t vertexCount) {
  DomainColoring out;
  out.colorOf.assign(vertexCount, 0);
  out.domains.resize(vertexCount > 0 ? 1 : 0);
  for (std::size_t v = 0; v < vertexCount; ++v) out.domains[0].push_back(static_cast<VertexIndex>(v));
  return out;
}

DomainColoring greedyDomainDecomposition(const MeshTopology& topology) {
  constexpr auto kUncolored = std::numeric_limits<std::uint32_t>::max();
  const std::size_t nv = topology.vertexCount();
  DomainColoring out;
  out.colorOf.assign(nv, kUncolored);

  // taken[c] == v marks color c as used by a neighbor of v.
  std::vector<std::size_t> taken(topology.maxDegree() + 2, std::numeric_limits<std::size_t>::max());
  for (std::size_t v = 0; v < nv; ++v) {
    for (VertexIndex u : topology.ring(v)) {
      const auto c = out.colorOf[u];
      if (c != kUncolored) taken[c] = v;
    }
    std::uint32_t color = 0;
    while (taken[color] == v) ++color;
    out.colorOf[v] = color;
    if (color >= out.domains.size()) out.domains.resize(color + 1);
    out.domains[color].push_back(static_cast<VertexIndex>(v));
  }
  return out;
}

bool isProperColoring(const DomainColoring& coloring, const MeshTopology& topology) {
  for (std::size_t v = 0; v < topology.vertexCount(); ++v) {
    for (VertexIndex u : topology.ring(v)) {
      if (coloring.colorOf[u] == coloring.colorOf[v]) return false;
    }
  }
  return true;
}

}  // namespace gcf
