#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "gcf/curvature.hpp"
#include "gcf/generators.hpp"
#include "support/brute_force.hpp"
#include "support/fixtures.hpp"

using namespace gcf;
using std::numbers::pi;

TEST(FaceNormals, UnitRightTriangle) {
  const auto fn = faceNormals(oracle::unitTriangle());
  EXPECT_EQ(fn.normals[0], (Vec3{0, 0, 1}));
  EXPECT_EQ(fn.areas[0], 0.5);
  EXPECT_FALSE(fn.degenerate[0]);
}

TEST(FaceNormals, CollinearFaceFlagged) {
  TriangleMesh m;
  m.vertices = {{0, 0, 0}, {1, 0, 0}, {2, 0, 0}};
  m.faces = {{0, 1, 2}};
  const auto fn = faceNormals(m);
  EXPECT_EQ(fn.areas[0], 0.0);
  EXPECT_TRUE(fn.degenerate[0]);
  EXPECT_EQ(fn.normals[0], (Vec3{0, 0, 0}));
}

// Property: scaling by s multiplies areas by s^2 and leaves normals unchanged.
TEST(FaceNormals, ScaleCovariance) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-2, 2), su(0.01, 100);
  for (int trial = 0; trial < 200; ++trial) {
    TriangleMesh m;
    m.vertices = {{u(rng), u(rng), u(rng)}, {u(rng), u(rng), u(rng)}, {u(rng), u(rng), u(rng)}};
    m.faces = {{0, 1, 2}};
    const double s = su(rng);
    const auto a = faceNormals(m);
    const auto b = faceNormals(oracle::scaled(m, s));
    EXPECT_NEAR(b.areas[0], a.areas[0] * s * s, 1e-12 * b.areas[0]);
    EXPECT_LT(norm(b.normals[0] - a.normals[0]), 1e-12);
  }
}

TEST(VertexNormals, PyramidApexAlongAxis) {
  const auto mesh = oracle::squarePyramid(0.7);
  const auto vn = vertexNormals(mesh, buildTopology(mesh));
  // Brute force: sum of area-weighted face normals at the apex.
  Vec3 sum;
  for (const Face& f : mesh.faces) {
    if (f[0] != 0 && f[1] != 0 && f[2] != 0) continue;
    sum += cross(mesh.vertices[f[1]] - mesh.vertices[f[0]], mesh.vertices[f[2]] - mesh.vertices[f[0]]) * 0.5;
  }
  EXPECT_NEAR(sum.x, 0.0, 1e-15);
  EXPECT_NEAR(sum.y, 0.0, 1e-15);
  EXPECT_LT(norm(vn.normals[0] - Vec3{0, 0, 1}), 1e-15);
  EXPECT_LT(norm(vn.normals[0] - sum * (1.0 / norm(sum))), 1e-15);
}

TEST(VertexNormals, PlanarGridInteriorIsExactPlaneNormal) {
  const auto mesh = makeGrid(4, 0.37);
  const auto topo = buildTopology(mesh);
  const auto vn = vertexNormals(mesh, topo);
  for (std::size_t v = 0; v < mesh.vertexCount(); ++v) {
    if (topo.isInterior(v)) EXPECT_EQ(vn.normals[v], (Vec3{0, 0, 1}));
  }
}

TEST(VertexNormals, TetrahedronVertexPointsAwayFromOppositeFace) {
  const auto mesh = oracle::regularTetrahedron(1.3);
  const auto vn = vertexNormals(mesh, buildTopology(mesh));
  for (VertexIndex v = 0; v < 4; ++v) {
    Vec3 centroid;
    for (VertexIndex u = 0; u < 4; ++u) {
      if (u != v) centroid += mesh.vertices[u] * (1.0 / 3.0);
    }
    const Vec3 axis = mesh.vertices[v] - centroid;
    EXPECT_LT(norm(vn.normals[v] - axis * (1.0 / norm(axis))), 1e-14);
  }
}

TEST(VertexNormals, CancellingFacesFlagged) {
  // Two opposite-wound copies of a triangle around vertex 0 cancel exactly.
  TriangleMesh m = oracle::unitTriangle();
  m.faces.push_back({0, 2, 1});
  const auto vn = vertexNormals(m, buildTopology(m));
  EXPECT_TRUE(vn.degenerate[0]);
}

TEST(GaussianCurvature, RegularTetrahedron) {
  const auto mesh = oracle::regularTetrahedron(1.0);
  const auto field = gaussianCurvature(mesh, buildTopology(mesh));
  // Hand computation: three equilateral corners of pi/3 meet at each vertex.
  const double ringArea = 3.0 * std::sqrt(3.0) / 4.0;
  for (std::size_t v = 0; v < 4; ++v) {
    EXPECT_NEAR(field.deficit[v], pi, 1e-14);
    EXPECT_NEAR(field.ringArea[v], ringArea, 1e-14);
    EXPECT_NEAR(field.K[v], 2.4184, 1e-4);
    EXPECT_NEAR(field.K[v], pi / ringArea, 1e-13);
  }
  // Brute-force acos angle sum agrees with the deficit total.
  EXPECT_NEAR(4 * 2 * pi - oracle::bruteAngleSum(mesh), 4 * pi, 1e-12);
}

TEST(GaussianCurvature, PlanarGridInteriorIsFlat) {
  const auto mesh = makeGrid(5);
  const auto topo = buildTopology(mesh);
  const auto field = gaussianCurvature(mesh, topo);
  for (std::size_t v = 0; v < mesh.vertexCount(); ++v) {
    EXPECT_EQ(field.boundary[v] != 0, !topo.isInterior(v));
    if (topo.isInterior(v)) {
      EXPECT_NEAR(field.deficit[v], 0.0, 1e-14);
      EXPECT_NEAR(field.K[v], 0.0, 1e-14);
    }
  }
  EXPECT_NEAR(gaussianCurvatureEnergy(field), 0.0, 1e-12);
}

TEST(GaussianCurvature, GaussBonnetOnIcospheres) {
  for (int s = 0; s <= 4; ++s) {
    const auto mesh = makeIcosphere(s);
    const auto field = gaussianCurvature(mesh, buildTopology(mesh));
    double total = 0.0;
    for (double d : field.deficit) total += d;
    EXPECT_NEAR(total, 2 * pi * static_cast<double>(oracle::eulerCharacteristic(mesh)), 1e-9 * 4 * pi);
    EXPECT_NEAR(total, 4 * pi, 1e-9 * 4 * pi);
  }
}

TEST(GaussianCurvature, GaussBonnetOnJitteredClosedMeshes) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    for (const auto& base : {makeCube(4), makeCylinder(12, 5, true), makeCone(12, 5, true), makeIcosphere(2)}) {
      const auto mesh = oracle::jittered(base, 0.02, seed);
      const auto field = gaussianCurvature(mesh, buildTopology(mesh));
      double total = 0.0;
      for (double d : field.deficit) total += d;
      EXPECT_NEAR(total, 4 * pi, 1e-9 * 4 * pi);
      EXPECT_NEAR(total, 2 * pi * mesh.vertexCount() - oracle::bruteAngleSum(mesh), 1e-9 * 4 * pi);
    }
  }
}

TEST(GaussianCurvature, ScaleCovariance) {
  const auto mesh = oracle::jittered(makeIcosphere(2), 0.03, 9);
  const auto topo = buildTopology(mesh);
  const auto a = gaussianCurvature(mesh, topo);
  for (double s : {0.01, 3.0, 250.0}) {
    const auto b = gaussianCurvature(oracle::scaled(mesh, s), topo);
    for (std::size_t v = 0; v < mesh.vertexCount(); ++v) {
      EXPECT_NEAR(b.deficit[v], a.deficit[v], 1e-12);
      EXPECT_NEAR(b.K[v] * s * s, a.K[v], 1e-10 * std::abs(a.K[v]) + 1e-12);
    }
    EXPECT_NEAR(gaussianCurvatureEnergy(b) * s * s, gaussianCurvatureEnergy(a), 1e-10 * gaussianCurvatureEnergy(a));
  }
}

TEST(GaussianCurvature, RigidMotionInvariance) {
  const auto mesh = oracle::jittered(makeCube(3), 0.05, 4);
  const auto topo = buildTopology(mesh);
  const auto a = gaussianCurvature(mesh, topo);
  const auto b = gaussianCurvature(oracle::rigidMotion(mesh, {1, 2, 3}, 0.8, {5, -2, 7}), topo);
  for (std::size_t v = 0; v < mesh.vertexCount(); ++v) {
    EXPECT_NEAR(b.deficit[v], a.deficit[v], 1e-12 * std::max(1.0, std::abs(a.deficit[v])));
    EXPECT_NEAR(b.ringArea[v], a.ringArea[v], 1e-12 * a.ringArea[v]);
    EXPECT_NEAR(b.K[v], a.K[v], 1e-11 * std::max(1.0, std::abs(a.K[v])));
  }
  EXPECT_NEAR(gaussianCurvatureEnergy(b), gaussianCurvatureEnergy(a), 1e-12 * gaussianCurvatureEnergy(a));
}

TEST(GaussianCurvatureEnergy, TetrahedronAndSign) {
  const auto mesh = oracle::regularTetrahedron();
  const auto field = gaussianCurvature(mesh, buildTopology(mesh));
  EXPECT_NEAR(gaussianCurvatureEnergy(field), 16 * pi / (3 * std::sqrt(3.0)), 1e-12);
  EXPECT_NEAR(gaussianCurvatureEnergy(field), 9.6736, 1e-4);
  const auto saddle = oracle::jittered(makeGrid(6), 0.2, 2);
  const auto sf = gaussianCurvature(saddle, buildTopology(saddle));
  EXPECT_GE(gaussianCurvatureEnergy(sf), 0.0);
  EXPECT_GE(gaussianCurvatureEnergy(sf, true), gaussianCurvatureEnergy(sf, false));
}
