#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "gcf/errors.hpp"
#include "gcf/generators.hpp"
#include "gcf/mesh.hpp"
#include "support/brute_force.hpp"
#include "support/fixtures.hpp"

using namespace gcf;

TEST(Mesh, ValidateRejectsOutOfRangeIndex) {
  TriangleMesh m = oracle::unitTriangle();
  m.faces.push_back({0, 1, 7});
  EXPECT_THROW(m.validate(), IndexError);
}

TEST(Mesh, ValidateRejectsRepeatedIndex) {
  TriangleMesh m = oracle::unitTriangle();
  m.faces.push_back({0, 1, 1});
  EXPECT_THROW(m.validate(), IndexError);
}

TEST(MeshStats, EquilateralTriangleHasUnitEdgeLength) {
  EXPECT_NEAR(meanEdgeLength(oracle::equilateralTriangle()), 1.0, 1e-15);
}

TEST(MeshStats, TetrahedronEdgeTwo) {
  const auto stats = meshStats(oracle::regularTetrahedron(2.0));
  EXPECT_NEAR(stats.meanEdgeLength, 2.0, 1e-14);
  EXPECT_EQ(stats.edgeCount, 6u);
  EXPECT_EQ(stats.boundaryVertexCount, 0u);
}

TEST(MeshStats, UnitGridMatchesEdgeEnumeration) {
  // Brute force: every grid edge is axis-aligned (length 1) or a quad diagonal (sqrt 2).
  for (int n : {1, 2, 5}) {
    const auto grid = makeGrid(n);
    std::set<std::pair<VertexIndex, VertexIndex>> edges;
    for (const Face& f : grid.faces) {
      for (int k = 0; k < 3; ++k) {
        const auto a = f[static_cast<std::size_t>(k)], b = f[static_cast<std::size_t>((k + 1) % 3)];
        edges.insert({std::min(a, b), std::max(a, b)});
      }
    }
    std::size_t unit = 0, diag = 0;
    for (const auto& [a, b] : edges) {
      const double len = norm(grid.vertices[a] - grid.vertices[b]);
      (std::abs(len - 1.0) < 1e-12 ? unit : diag)++;
    }
    EXPECT_EQ(unit, static_cast<std::size_t>(2 * n * (n + 1)));
    EXPECT_EQ(diag, static_cast<std::size_t>(n * n));
    const double expected = (static_cast<double>(unit) + std::sqrt(2.0) * static_cast<double>(diag)) /
                            static_cast<double>(unit + diag);
    const auto stats = meshStats(grid);
    EXPECT_NEAR(stats.meanEdgeLength, expected, 1e-14);
    EXPECT_EQ(stats.edgeCount, unit + diag);
    EXPECT_EQ(stats.boundaryVertexCount, static_cast<std::size_t>(4 * n));
  }
}

TEST(MeshStats, EmptyMeshThrows) {
  TriangleMesh m;
  m.vertices = {{0, 0, 0}};
  EXPECT_THROW(meshStats(m), EmptyMesh);
  EXPECT_THROW(meanEdgeLength(m), EmptyMesh);
}

TEST(MeshStats, EachEdgeCountedOnce) {
  const auto sphere = makeIcosphere(2);
  EXPECT_NEAR(meanEdgeLength(sphere), oracle::bruteMeanEdgeLength(sphere), 1e-14);
  EXPECT_EQ(meshStats(sphere).edgeCount, sphere.faceCount() * 3 / 2);
}
