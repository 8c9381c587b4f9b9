#pragma once

// Reference implementations used only by tests. They share nothing with the
// library beyond the plain mesh/vector types: rings, boundary detection, normals
// and the update are recomputed from the face list by direct enumeration.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "gcf/mesh.hpp"

namespace gcf::oracle {

inline std::vector<VertexIndex> bruteNeighbors(const TriangleMesh& mesh, VertexIndex v) {
  std::set<VertexIndex> out;
  for (const Face& f : mesh.faces) {
    if (f[0] == v || f[1] == v || f[2] == v) {
      for (VertexIndex u : f) {
        if (u != v) out.insert(u);
      }
    }
  }
  return {out.begin(), out.end()};
}

/// A vertex lies on the boundary if any of its edges is used by exactly one face.
inline bool bruteIsBoundary(const TriangleMesh& mesh, VertexIndex v) {
  for (VertexIndex u : bruteNeighbors(mesh, v)) {
    int uses = 0;
    for (const Face& f : mesh.faces) {
      const bool hasV = f[0] == v || f[1] == v || f[2] == v;
      const bool hasU = f[0] == u || f[1] == u || f[2] == u;
      uses += hasV && hasU;
    }
    if (uses == 1) return true;
  }
  return false;
}

/// Cyclic ring of an interior vertex: repeatedly find the face holding the edge
/// (v, last) that was not used yet. Orientation is irrelevant downstream.
inline std::vector<VertexIndex> bruteRing(const TriangleMesh& mesh, VertexIndex v) {
  std::vector<Face> incident;
  for (const Face& f : mesh.faces) {
    if (f[0] == v || f[1] == v || f[2] == v) incident.push_back(f);
  }
  std::vector<bool> used(incident.size(), false);
  auto others = [&](const Face& f) {
    std::vector<VertexIndex> o;
    for (VertexIndex u : f) {
      if (u != v) o.push_back(u);
    }
    return o;
  };
  std::vector<VertexIndex> ring;
  const auto first = others(incident[0]);
  used[0] = true;
  ring = {first[0], first[1]};
  for (;;) {
    bool advanced = false;
    for (std::size_t i = 0; i < incident.size(); ++i) {
      if (used[i]) continue;
      const auto o = others(incident[i]);
      if (o[0] == ring.back() || o[1] == ring.back()) {
        const VertexIndex next = o[0] == ring.back() ? o[1] : o[0];
        used[i] = true;
        advanced = true;
        if (next != ring.front()) ring.push_back(next);
        break;
      }
    }
    if (!advanced) break;
  }
  return ring;
}

/// Sum over incident faces of area * unit face normal, with the face normal taken
/// from the stored winding.
inline std::optional<Vec3> bruteVertexNormal(const TriangleMesh& mesh, const std::vector<Vec3>& p, VertexIndex v) {
  Vec3 sum;
  double maxArea = 0.0;
  for (const Face& f : mesh.faces) {
    if (f[0] != v && f[1] != v && f[2] != v) continue;
    const Vec3 c = cross(p[f[1]] - p[f[0]], p[f[2]] - p[f[0]]);
    const double len = norm(c);
    if (len == 0.0) continue;
    const double area = 0.5 * len;
    sum += c * (area / len);
    maxArea = std::max(maxArea, area);
  }
  const double len = norm(sum);
  if (len == 0.0 || len < 1e-14 * maxArea) return std::nullopt;
  return sum * (1.0 / len);
}

/// New position of one vertex, straight from the defining formulas.
inline Vec3 bruteUpdate(const TriangleMesh& mesh, const std::vector<Vec3>& p, VertexIndex v, double scale) {
  if (bruteIsBoundary(mesh, v)) return p[v];
  const auto ring = bruteRing(mesh, v);
  const std::size_t m = ring.size();

  Vec3 centroid;
  for (VertexIndex u : ring) centroid += p[u] * (1.0 / static_cast<double>(m));
  const Vec3 delta = p[v] - centroid;
  if (norm(delta) < 1e-14 * scale || norm(delta) == 0.0) return p[v];

  std::vector<Vec3> normals;
  if (auto n = bruteVertexNormal(mesh, p, v)) normals.push_back(*n);
  for (std::size_t k = 0; k < m; ++k) {
    const Vec3& here = p[ring[k]];
    const Vec3 c = cross(p[ring[(k + m - 1) % m]] - here, p[ring[(k + 1) % m]] - here);
    if (norm(c) < 1e-14 * scale * scale || norm(c) == 0.0) continue;
    normals.push_back(c * (1.0 / norm(c)));
  }
  if (normals.empty()) return p[v];

  double best = std::numeric_limits<double>::infinity();
  for (const Vec3& n : normals) {
    for (VertexIndex u : ring) best = std::min(best, std::abs(dot(n, p[u] - p[v])));
  }
  return p[v] - delta * (best / norm(delta));
}

/// One sweep in the given domain order; each domain reads a snapshot taken when it starts.
inline std::vector<Vec3> bruteStep(const TriangleMesh& mesh, std::vector<Vec3> p,
                                   const std::vector<std::vector<VertexIndex>>& domains, double scale) {
  for (const auto& domain : domains) {
    const std::vector<Vec3> snapshot = p;
    for (VertexIndex v : domain) p[v] = bruteUpdate(mesh, snapshot, v, scale);
  }
  return p;
}

inline double bruteMeanEdgeLength(const TriangleMesh& mesh) {
  std::set<std::pair<VertexIndex, VertexIndex>> edges;
  for (const Face& f : mesh.faces) {
    for (int k = 0; k < 3; ++k) {
      const VertexIndex a = f[static_cast<std::size_t>(k)], b = f[static_cast<std::size_t>((k + 1) % 3)];
      edges.insert({std::min(a, b), std::max(a, b)});
    }
  }
  double sum = 0.0;
  for (const auto& [a, b] : edges) sum += norm(mesh.vertices[a] - mesh.vertices[b]);
  return sum / static_cast<double>(edges.size());
}

/// Corner angle sum by acos, independent of the library's atan2 route.
inline double bruteAngleSum(const TriangleMesh& mesh) {
  double total = 0.0;
  for (const Face& f : mesh.faces) {
    for (int k = 0; k < 3; ++k) {
      const Vec3& at = mesh.vertices[f[static_cast<std::size_t>(k)]];
      const Vec3 a = mesh.vertices[f[static_cast<std::size_t>((k + 1) % 3)]] - at;
      const Vec3 b = mesh.vertices[f[static_cast<std::size_t>((k + 2) % 3)]] - at;
      total += std::acos(std::clamp(dot(a, b) / (norm(a) * norm(b)), -1.0, 1.0));
    }
  }
  return total;
}

/// Euler characteristic V - E + F from a direct edge enumeration.
inline long long eulerCharacteristic(const TriangleMesh& mesh) {
  std::set<std::pair<VertexIndex, VertexIndex>> edges;
  for (const Face& f : mesh.faces) {
    for (int k = 0; k < 3; ++k) {
      const VertexIndex a = f[static_cast<std::size_t>(k)], b = f[static_cast<std::size_t>((k + 1) % 3)];
      edges.insert({std::min(a, b), std::max(a, b)});
    }
  }
  return static_cast<long long>(mesh.vertexCount()) - static_cast<long long>(edges.size()) +
         static_cast<long long>(mesh.faceCount());
}

/// Signed enclosed volume; positive for outward winding.
inline double signedVolume(const TriangleMesh& mesh) {
  double vol = 0.0;
  for (const Face& f : mesh.faces) {
    vol += dot(mesh.vertices[f[0]], cross(mesh.vertices[f[1]], mesh.vertices[f[2]])) / 6.0;
  }
  return vol;
}

}  // namespace gcf::oracle
