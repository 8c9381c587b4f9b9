#pragma once

#include <cstdint>
#include <vector>

#include "gcf/mesh.hpp"
#include "gcf/topology.hpp"

namespace gcf {

struct FaceNormals {
  std::vector<Vec3> normals;           // unit, or zero for degenerate faces
  std::vector<double> areas;
  std::vector<std::uint8_t> degenerate;
};

struct VertexNormals {
  std::vector<Vec3> normals;           // unit, or zero where flagged
  std::vector<std::uint8_t> degenerate;
};

/// Angular-deficit curvature per vertex. K = deficit / ringArea where ringArea > 0, else 0.
struct CurvatureField {
  std::vector<double> K;
  std::vector<double> ringArea;  // plain sum of incident triangle areas
  std::vector<double> deficit;   // 2*pi minus incident corner angles
  std::vector<std::uint8_t> boundary;  // boundary or non-manifold: deficit not meaningful
};

FaceNormals faceNormals(const TriangleMesh& mesh);

/// Area-weighted average of incident face normals.
VertexNormals vertexNormals(const TriangleMesh& mesh, const MeshTopology& topology);

CurvatureField gaussianCurvature(const TriangleMesh& mesh, const MeshTopology& topology);

/// Sum of |K|. Boundary and non-manifold vertices are skipped unless includeBoundary.
double gaussianCurvatureEnergy(const CurvatureField& field, bool includeBoundary = false);

/// Convenience: topology + curvature + interior energy in one call.
double gaussianCurvatureEnergy(const TriangleMesh& mesh, const MeshTopology& topology);

}  // namespace gcf
