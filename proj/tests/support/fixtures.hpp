#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <utility>

#include "gcf/mesh.hpp"

namespace gcf::oracle {

/// Flips faces of a convex, origin-centered mesh so normals point away from the origin.
inline void orientOutward(TriangleMesh& mesh) {
  for (Face& f : mesh.faces) {
    const Vec3& a = mesh.vertices[f[0]];
    const Vec3 n = cross(mesh.vertices[f[1]] - a, mesh.vertices[f[2]] - a);
    const Vec3 c = (a + mesh.vertices[f[1]] + mesh.vertices[f[2]]) * (1.0 / 3.0);
    if (dot(n, c) < 0) std::swap(f[1], f[2]);
  }
}

inline TriangleMesh regularTetrahedron(double edge = 1.0) {
  const double s = edge / (2.0 * std::sqrt(2.0));
  TriangleMesh m;
  m.vertices = {{s, s, s}, {s, -s, -s}, {-s, s, -s}, {-s, -s, s}};
  m.faces = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  orientOutward(m);
  return m;
}

inline TriangleMesh unitTriangle() {
  TriangleMesh m;
  m.vertices = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
  m.faces = {{0, 1, 2}};
  return m;
}

inline TriangleMesh equilateralTriangle() {
  TriangleMesh m;
  m.vertices = {{0, 0, 0}, {1, 0, 0}, {0.5, std::sqrt(3.0) / 2.0, 0}};
  m.faces = {{0, 1, 2}};
  return m;
}

/// Two triangles touching only at vertex 0.
inline TriangleMesh bowtie() {
  TriangleMesh m;
  m.vertices = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {-1, 0, 0}, {-1, -1, 0}};
  m.faces = {{0, 1, 2}, {0, 3, 4}};
  return m;
}

/// Closed fan of `sides` triangles around vertex 0 at height `apexHeight` over a
/// regular polygon of unit circumradius in z = 0 (an open pyramid without base).
inline TriangleMesh pyramidFan(int sides, double apexHeight) {
  TriangleMesh m;
  m.vertices.push_back({0, 0, apexHeight});
  for (int i = 0; i < sides; ++i) {
    const double a = 2.0 * std::numbers::pi * i / sides;
    m.vertices.push_back({std::cos(a), std::sin(a), 0.0});
  }
  for (int i = 0; i < sides; ++i) {
    m.faces.push_back({0, static_cast<VertexIndex>(1 + i), static_cast<VertexIndex>(1 + (i + 1) % sides)});
  }
  return m;
}

/// Closed square pyramid (apex 0, base square + base faces), symmetric about z.
inline TriangleMesh squarePyramid(double height) {
  TriangleMesh m;
  m.vertices = {{0, 0, height}, {1, 0, 0}, {0, 1, 0}, {-1, 0, 0}, {0, -1, 0}};
  m.faces = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1}, {1, 4, 3}, {1, 3, 2}};
  return m;
}

/// Applies a rotation about a unit axis then a translation to every vertex.
inline TriangleMesh rigidMotion(TriangleMesh m, Vec3 axis, double angle, Vec3 shift) {
  axis = axis * (1.0 / norm(axis));
  const double c = std::cos(angle), s = std::sin(angle);
  for (Vec3& v : m.vertices) {
    // Rodrigues
    v = v * c + cross(axis, v) * s + axis * (dot(axis, v) * (1.0 - c)) + shift;
  }
  return m;
}

inline TriangleMesh scaled(TriangleMesh m, double s) {
  for (Vec3& v : m.vertices) v = v * s;
  return m;
}

/// Independent uniform jitter of every coordinate in [-amplitude, amplitude].
inline TriangleMesh jittered(TriangleMesh m, double amplitude, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-amplitude, amplitude);
  for (Vec3& v : m.vertices) v += Vec3{u(rng), u(rng), u(rng)};
  return m;
}

}  // namespace gcf::oracle
