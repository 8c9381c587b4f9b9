#pragma once

#include <string_view>

#include "gcf/mesh.hpp"

namespace gcf {

// Procedural ground-truth meshes. Closed shapes are watertight and wound with
// outward-facing normals. Resolutions below the minimum throw BadResolution.

/// Unit-radius subdivided icosahedron: 10 * 4^s + 2 vertices, 20 * 4^s faces.
TriangleMesh makeIcosphere(int subdivisions);

/// Cylinder of the given radius along z, centered at the origin. `segments`
/// around (>= 3), `rings` intervals along the axis (>= 1). Capped adds one
/// center vertex per end; uncapped leaves two boundary loops.
TriangleMesh makeCylinder(int segments, int rings, bool capped = true, double radius = 1.0, double height = 2.0);

/// Cone with its apex at +height/2 and base of `radius` at -height/2.
TriangleMesh makeCone(int segments, int rings, bool capped = true, double radius = 1.0, double height = 2.0);

/// Axis-aligned cube [-size/2, size/2]^3 with an n x n grid per face. Each
/// quad is split along the diagonal that points at the nearest face corner, so
/// every cube corner lies on a diagonal of each of its three face quads.
TriangleMesh makeCube(int n, double size = 2.0);

/// Planar n x n grid in z = 0 with (n + 1)^2 vertices, 2 n^2 faces.
TriangleMesh makeGrid(int n, double spacing = 1.0);

enum class ShapeKind { Sphere, Cylinder, Cone, Cube, Grid };

/// Accepts sphere/icosphere, cylinder, cone, cube, grid. Throws InvalidArgument.
ShapeKind parseShapeKind(std::string_view name);

struct ShapeParams {
  int subdivisions = 3;  // sphere
  int segments = 64;     // cylinder, cone
  int rings = 32;        // cylinder, cone
  int n = 16;            // cube, grid
  bool capped = true;
};

TriangleMesh generateMesh(ShapeKind kind, const ShapeParams& params);

}  // namespace gcf
