#include "gcf/generators.hpp"

#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <string>
#include <unordered_map>

#include "gcf/errors.hpp"

namespace gcf {

namespace {

void requireAtLeast(int value, int minimum, const char* what) {
  if (value < minimum) {
    throw BadResolution(std::string(what) + " must be at least " + std::to_string(minimum) + ", got " +
                        std::to_string(value));
  }
}

VertexIndex idx(std::size_t i) { return static_cast<VertexIndex>(i); }

// Rings of `segments` vertices sharing one cos/sin table, so vertices stacked
// along the axis differ only in z.
struct Revolution {
  std::vector<double> cosines, sines;

  explicit Revolution(int segments) {
    for (int i = 0; i < segments; ++i) {
      const double angle = 2.0 * std::numbers::pi * i / segments;
      cosines.push_back(std::cos(angle));
      sines.push_back(std::sin(angle));
    }
  }

  // Appends one ring; returns the index of its first vertex.
  std::size_t addRing(TriangleMesh& mesh, double radius, double z) const {
    const std::size_t first = mesh.vertexCount();
    for (std::size_t i = 0; i < cosines.size(); ++i) mesh.vertices.push_back({radius * cosines[i], radius * sines[i], z});
    return first;
  }
};

// Quads between two consecutive rings, outward when `lower` sits below `upper`.
void stitchRings(TriangleMesh& mesh, std::size_t lower, std::size_t upper, std::size_t segments) {
  for (std::size_t i = 0; i < segments; ++i) {
    const std::size_t j = (i + 1) % segments;
    const VertexIndex a = idx(lower + i), b = idx(lower + j), c = idx(upper + j), d = idx(upper + i);
    mesh.faces.push_back({a, b, c});
    mesh.faces.push_back({a, c, d});
  }
}

// Fan from `center` to a ring; `upward` selects a +z facing fan.
void capRing(TriangleMesh& mesh, std::size_t ring, std::size_t segments, VertexIndex center, bool upward) {
  for (std::size_t i = 0; i < segments; ++i) {
    const VertexIndex a = idx(ring + i), b = idx(ring + (i + 1) % segments);
    if (upward) {
      mesh.faces.push_back({center, a, b});
    } else {
      mesh.faces.push_back({center, b, a});
    }
  }
}

}  // namespace

TriangleMesh makeIcosphere(int subdivisions) {
  requireAtLeast(subdivisions, 0, "icosphere subdivision level");
  if (subdivisions > 10) throw BadResolution("icosphere subdivision level above 10 is not supported");

  const double t = (1.0 + std::sqrt(5.0)) / 2.0;
  TriangleMesh mesh;
  mesh.vertices = {{-1, t, 0}, {1, t, 0}, {-1, -t, 0}, {1, -t, 0}, {0, -1, t}, {0, 1, t},
                   {0, -1, -t}, {0, 1, -t}, {t, 0, -1}, {t, 0, 1}, {-t, 0, -1}, {-t, 0, 1}};
  mesh.faces = {{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11}, {1, 5, 9}, {5, 11, 4},
                {11, 10, 2}, {10, 7, 6}, {7, 1, 8},   {3, 9, 4},  {3, 4, 2},   {3, 2, 6}, {3, 6, 8},
                {3, 8, 9},   {4, 9, 5},  {2, 4, 11},  {6, 2, 10}, {8, 6, 7},   {9, 8, 1}};
  for (Vec3& v : mesh.vertices) v = v * (1.0 / norm(v));

  for (int s = 0; s < subdivisions; ++s) {
    std::unordered_map<std::uint64_t, VertexIndex> midpoints;
    auto midpoint = [&](VertexIndex a, VertexIndex b) {
      const std::uint64_t key = a < b ? (std::uint64_t{a} << 32 | b) : (std::uint64_t{b} << 32 | a);
      if (auto it = midpoints.find(key); it != midpoints.end()) return it->second;
      const Vec3 m = (mesh.vertices[a] + mesh.vertices[b]) * 0.5;
      mesh.vertices.push_back(m * (1.0 / norm(m)));
      const VertexIndex id = idx(mesh.vertexCount() - 1);
      midpoints.emplace(key, id);
      return id;
    };
    std::vector<Face> faces;
    faces.reserve(mesh.faces.size() * 4);
    for (const Face& f : mesh.faces) {
      const VertexIndex ab = midpoint(f[0], f[1]), bc = midpoint(f[1], f[2]), ca = midpoint(f[2], f[0]);
      faces.push_back({f[0], ab, ca});
      faces.push_back({f[1], bc, ab});
      faces.push_back({f[2], ca, bc});
      faces.push_back({ab, bc, ca});
    }
    mesh.faces = std::move(faces);
  }
  return mesh;
}

TriangleMesh makeCylinder(int segments, int rings, bool capped, double radius, double height) {
  requireAtLeast(segments, 3, "cylinder segment count");
  requireAtLeast(rings, 1, "cylinder ring count");
  const Revolution rev(segments);
  const auto seg = static_cast<std::size_t>(segments);
  TriangleMesh mesh;
  std::vector<std::size_t> starts;
  for (int j = 0; j <= rings; ++j) starts.push_back(rev.addRing(mesh, radius, -height / 2 + height * j / rings));
  for (int j = 0; j < rings; ++j) stitchRings(mesh, starts[static_cast<std::size_t>(j)], starts[static_cast<std::size_t>(j) + 1], seg);
  if (capped) {
    mesh.vertices.push_back({0.0, 0.0, -height / 2});
    capRing(mesh, starts.front(), seg, idx(mesh.vertexCount() - 1), false);
    mesh.vertices.push_back({0.0, 0.0, height / 2});
    capRing(mesh, starts.back(), seg, idx(mesh.vertexCount() - 1), true);
  }
  return mesh;
}

TriangleMesh makeCone(int segments, int rings, bool capped, double radius, double height) {
  requireAtLeast(segments, 3, "cone segment count");
  requireAtLeast(rings, 1, "cone ring count");
  const Revolution rev(segments);
  const auto seg = static_cast<std::size_t>(segments);
  TriangleMesh mesh;
  std::vector<std::size_t> starts;
  for (int j = 0; j < rings; ++j) {
    const double f = static_cast<double>(j) / rings;
    starts.push_back(rev.addRing(mesh, radius * (1.0 - f), -height / 2 + height * f));
  }
  for (std::size_t j = 0; j + 1 < starts.size(); ++j) stitchRings(mesh, starts[j], starts[j + 1], seg);
  mesh.vertices.push_back({0.0, 0.0, height / 2});
  const VertexIndex apex = idx(mesh.vertexCount() - 1);
  for (std::size_t i = 0; i < seg; ++i) {
    mesh.faces.push_back({idx(starts.back() + i), idx(starts.back() + (i + 1) % seg), apex});
  }
  if (capped) {
    mesh.vertices.push_back({0.0, 0.0, -height / 2});
    capRing(mesh, starts.front(), seg, idx(mesh.vertexCount() - 1), false);
  }
  return mesh;
}

TriangleMesh makeCube(int n, double size) {
  requireAtLeast(n, 1, "cube grid resolution");
  TriangleMesh mesh;
  std::map<std::array<int, 3>, VertexIndex> lattice;
  auto vertexAt = [&](const std::array<int, 3>& p) {
    if (auto it = lattice.find(p); it != lattice.end()) return it->second;
    auto coord = [&](int i) { return -size / 2 + size * i / n; };
    mesh.vertices.push_back({coord(p[0]), coord(p[1]), coord(p[2])});
    const VertexIndex id = idx(mesh.vertexCount() - 1);
    lattice.emplace(p, id);
    return id;
  };

  struct CubeFace {
    int axis;  // fixed coordinate
    int level; // 0 or n
    int u, v;  // tangent axes with u x v pointing outward
  };
  const CubeFace cubeFaces[6] = {{0, n, 1, 2}, {0, 0, 2, 1}, {1, n, 2, 0}, {1, 0, 0, 2}, {2, n, 0, 1}, {2, 0, 1, 0}};

  for (const CubeFace& cf : cubeFaces) {
    auto at = [&](int a, int b) {
      std::array<int, 3> p{};
      p[static_cast<std::size_t>(cf.axis)] = cf.level;
      p[static_cast<std::size_t>(cf.u)] = a;
      p[static_cast<std::size_t>(cf.v)] = b;
      return vertexAt(p);
    };
    for (int b = 0; b < n; ++b) {
      for (int a = 0; a < n; ++a) {
        const VertexIndex p00 = at(a, b), p10 = at(a + 1, b), p11 = at(a + 1, b + 1), p01 = at(a, b + 1);
        // Quad corner nearest the closest face corner, per axis.
        const bool lowU = 2 * a + 1 < n;
        const bool lowV = 2 * b + 1 < n;
        if (lowU == lowV) {
          mesh.faces.push_back({p00, p10, p11});
          mesh.faces.push_back({p00, p11, p01});
        } else {
          mesh.faces.push_back({p00, p10, p01});
          mesh.faces.push_back({p10, p11, p01});
        }
      }
    }
  }
  return mesh;
}

TriangleMesh makeGrid(int n, double spacing) {
  requireAtLeast(n, 1, "grid resolution");
  TriangleMesh mesh;
  const auto side = static_cast<std::size_t>(n) + 1;
  for (std::size_t j = 0; j < side; ++j) {
    for (std::size_t i = 0; i < side; ++i) {
      mesh.vertices.push_back({spacing * static_cast<double>(i), spacing * static_cast<double>(j), 0.0});
    }
  }
  for (std::size_t j = 0; j + 1 < side; ++j) {
    for (std::size_t i = 0; i + 1 < side; ++i) {
      const VertexIndex a = idx(j * side + i), b = idx(j * side + i + 1), c = idx((j + 1) * side + i + 1),
                        d = idx((j + 1) * side + i);
      mesh.faces.push_back({a, b, c});
      mesh.faces.push_back({a, c, d});
    }
  }
  return mesh;
}

ShapeKind parseShapeKind(std::string_view name) {
  if (name == "sphere" || name == "icosphere") return ShapeKind::Sphere;
  if (name == "cylinder") return ShapeKind::Cylinder;
  if (name == "cone") return ShapeKind::Cone;
  if (name == "cube") return ShapeKind::Cube;
  if (name == "grid") return ShapeKind::Grid;
  throw InvalidArgument("unknown shape kind '" + std::string(name) + "'");
}

TriangleMesh generateMesh(ShapeKind kind, const ShapeParams& params) {
  switch (kind) {
    case ShapeKind::Sphere: return makeIcosphere(params.subdivisions);
    case ShapeKind::Cylinder: return makeCylinder(params.segments, params.rings, params.capped);
    case ShapeKind::Cone: return makeCone(params.segments, params.rings, params.capped);
    case ShapeKind::Cube: return makeCube(params.n);
    case ShapeKind::Grid: return makeGrid(params.n);
  }
  throw InvalidArgument("unknown shape kind");
}

}  // namespace gcf
