#include "gcf/curvature.hpp"

#include <algorithm>
#include <numbers>

#include "gcf/simd.hpp"

namespace gcf {

namespace {

// Unnormalized face cross products (p1 - p0) x (p2 - p0) and their lengths.
struct FaceCrosses {
  std::vector<double> x, y, z, length;
};

FaceCrosses faceCrosses(const TriangleMesh& mesh) {
  const std::size_t nf = mesh.faceCount();
  std::vector<double> ax(nf), ay(nf), az(nf), bx(nf), by(nf), bz(nf);
  for (std::size_t f = 0; f < nf; ++f) {
    const Vec3& p0 = mesh.vertices[mesh.faces[f][0]];
    const Vec3 a = mesh.vertices[mesh.faces[f][1]] - p0;
    const Vec3 b = mesh.vertices[mesh.faces[f][2]] - p0;
    ax[f] = a.x, ay[f] = a.y, az[f] = a.z;
    bx[f] = b.x, by[f] = b.y, bz[f] = b.z;
  }
  FaceCrosses c;
  c.x.resize(nf), c.y.resize(nf), c.z.resize(nf), c.length.resize(nf);
  simd::kernels().crossBatch({ax.data(), ay.data(), az.data(), nf}, {bx.data(), by.data(), bz.data(), nf},
                             {c.x.data(), c.y.data(), c.z.data(), nf}, c.length.data());
  return c;
}

}  // namespace

FaceNormals faceNormals(const TriangleMesh& mesh) {
  const FaceCrosses c = faceCrosses(mesh);
  const std::size_t nf = mesh.faceCount();
  FaceNormals out;
  out.normals.resize(nf);
  out.areas.resize(nf);
  out.degenerate.assign(nf, 0);
  for (std::size_t f = 0; f < nf; ++f) {
    out.areas[f] = 0.5 * c.length[f];
    if (c.length[f] > 0.0) {
      out.normals[f] = Vec3{c.x[f], c.y[f], c.z[f]} * (1.0 / c.length[f]);
    } else {
      out.degenerate[f] = 1;
    }
  }
  return out;
}

VertexNormals vertexNormals(const TriangleMesh& mesh, const MeshTopology& topology) {
  const FaceNormals fn = faceNormals(mesh);
  const std::size_t nv = mesh.vertexCount();
  VertexNormals out;
  out.normals.resize(nv);
  out.degenerate.assign(nv, 0);
  for (std::size_t v = 0; v < nv; ++v) {
    Vec3 sum;
    double maxArea = 0.0;
    for (std::uint32_t f : topology.vertexFaces(v)) {
      sum += fn.normals[f] * fn.areas[f];
      maxArea = std::max(maxArea, fn.areas[f]);
    }
    const double len = norm(sum);
    if (len == 0.0 || len < 1e-14 * maxArea) {
      out.degenerate[v] = 1;
    } else {
      out.normals[v] = sum * (1.0 / len);
    }
  }
  return out;
}

CurvatureField gaussianCurvature(const TriangleMesh& mesh, const MeshTopology& topology) {
  const std::size_t nv = mesh.vertexCount();
  CurvatureField field;
  field.K.assign(nv, 0.0);
  field.ringArea.assign(nv, 0.0);
  field.deficit.assign(nv, 2.0 * std::numbers::pi);
  field.boundary.assign(nv, 0);

  const FaceCrosses c = faceCrosses(mesh);
  for (std::size_t v = 0; v < nv; ++v) {
    double angles = 0.0;
    double area = 0.0;
    for (std::uint32_t f : topology.vertexFaces(v)) {
      const Face& face = mesh.faces[f];
      const int p = face[0] == v ? 0 : (face[1] == v ? 1 : 2);
      const Vec3& at = mesh.vertices[v];
      const Vec3 a = mesh.vertices[face[static_cast<std::size_t>((p + 1) % 3)]] - at;
      const Vec3 b = mesh.vertices[face[static_cast<std::size_t>((p + 2) % 3)]] - at;
      angles += angleBetween(a, b);
      area += 0.5 * c.length[f];
    }
    field.deficit[v] = 2.0 * std::numbers::pi - angles;
    field.ringArea[v] = area;
    field.K[v] = area > 0.0 ? field.deficit[v] / area : 0.0;
    field.boundary[v] = !topology.isInterior(v);
  }
  return field;
}

double gaussianCurvatureEnergy(const CurvatureField& field, bool includeBoundary) {
  double energy = 0.0;
  for (std::size_t v = 0; v < field.K.size(); ++v) {
    if (includeBoundary || !field.boundary[v]) energy += std::abs(field.K[v]);
  }
  return energy;
}

double gaussianCurvatureEnergy(const TriangleMesh& mesh, const MeshTopology& topology) {
  return gaussianCurvatureEnergy(gaussianCurvature(mesh, topology), false);
}

}  // namespace gcf
