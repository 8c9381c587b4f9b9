#include "gcf/mesh.hpp"

#include <algorithm>
#include <string>

#include "gcf/errors.hpp"

namespace gcf {

namespace {

using Edge = std::array<VertexIndex, 2>;

Edge makeEdge(VertexIndex a, VertexIndex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Every face edge, undirected, sorted so duplicates are adjacent.
std::vector<Edge> sortedFaceEdges(const TriangleMesh& mesh) {
  std::vector<Edge> edges;
  edges.reserve(mesh.faces.size() * 3);
  for (const Face& f : mesh.faces) {
    edges.push_back(makeEdge(f[0], f[1]));
    edges.push_back(makeEdge(f[1], f[2]));
    edges.push_back(makeEdge(f[2], f[0]));
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace

void TriangleMesh::validate() const {
  const auto n = vertices.size();
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const Face& f = faces[i];
    for (VertexIndex v : f) {
      if (v >= n) {
        throw IndexError("face " + std::to_string(i) + " references vertex " + std::to_string(v) + " but mesh has " +
                         std::to_string(n) + " vertices");
      }
    }
    if (f[0] == f[1] || f[1] == f[2] || f[0] == f[2]) {
      throw IndexError("face " + std::to_string(i) + " repeats a vertex index");
    }
  }
}

std::vector<std::array<VertexIndex, 2>> uniqueEdges(const TriangleMesh& mesh) {
  auto edges = sortedFaceEdges(mesh);
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

double meanEdgeLength(const TriangleMesh& mesh) {
  if (mesh.faces.empty()) throw EmptyMesh("mean edge length of a mesh without faces");
  const auto edges = uniqueEdges(mesh);
  double sum = 0.0;
  for (const auto& e : edges) sum += distance(mesh.vertices[e[0]], mesh.vertices[e[1]]);
  return sum / static_cast<double>(edges.size());
}

MeshStats meshStats(const TriangleMesh& mesh) {
  if (mesh.faces.empty()) throw EmptyMesh("statistics of a mesh without faces");
  const auto edges = sortedFaceEdges(mesh);

  MeshStats stats;
  stats.vertexCount = mesh.vertexCount();
  stats.faceCount = mesh.faceCount();

  std::vector<char> boundary(mesh.vertexCount(), 0);
  double sum = 0.0;
  for (std::size_t i = 0; i < edges.size();) {
    std::size_t j = i + 1;
    while (j < edges.size() && edges[j] == edges[i]) ++j;
    const auto& e = edges[i];
    sum += distance(mesh.vertices[e[0]], mesh.vertices[e[1]]);
    ++stats.edgeCount;
    if (j - i == 1) boundary[e[0]] = boundary[e[1]] = 1;
    i = j;
  }
  stats.meanEdgeLength = sum / static_cast<double>(stats.edgeCount);
  stats.boundaryVertexCount = static_cast<std::size_t>(std::count(boundary.begin(), boundary.end(), 1));
  return stats;
}

}  // namespace gcf
