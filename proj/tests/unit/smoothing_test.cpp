#include <gtest/gtest.h>

#include <cmath>

#include "gcf/errors.hpp"
#include "gcf/generators.hpp"
#include "gcf/smoothing.hpp"
#include "support/fixtures.hpp"

using namespace gcf;

namespace {

double meanRadius(const TriangleMesh& m) {
  double s = 0.0;
  for (const Vec3& v : m.vertices) s += norm(v);
  return s / static_cast<double>(m.vertexCount());
}

}  // namespace

TEST(Laplacian, UniformGridIsFixed) {
  const auto g = makeGrid(8);
  EXPECT_EQ(laplacianSmooth(g, buildTopology(g)), g);
}

TEST(Laplacian, ZeroLambdaIsIdentity) {
  const auto m = oracle::jittered(makeIcosphere(2), 0.05, 1);
  EXPECT_EQ(laplacianSmooth(m, buildTopology(m), {10, 0.0}), m);
}

TEST(Laplacian, SinglePassOracle) {
  auto g = makeGrid(2);
  g.vertices[4].z = 1.2;
  const auto out = laplacianSmooth(g, buildTopology(g), {1, 0.5});
  EXPECT_DOUBLE_EQ(out.vertices[4].z, 0.6);
  for (std::size_t v = 0; v < 9; ++v) {
    if (v != 4) EXPECT_EQ(out.vertices[v], g.vertices[v]);
  }
}

TEST(Laplacian, ShrinksSphere) {
  const auto m = makeIcosphere(3);
  EXPECT_LT(meanRadius(laplacianSmooth(m, buildTopology(m), {10, 0.5})), 0.99);
}

TEST(Taubin, ShrinksLessThanLaplacian) {
  const auto m = makeIcosphere(3);
  const auto topo = buildTopology(m);
  const double lap = std::abs(1.0 - meanRadius(laplacianSmooth(m, topo, {10, 0.5})));
  const double tau = std::abs(1.0 - meanRadius(taubinSmooth(m, topo, {10, 0.5, -0.53})));
  EXPECT_LT(tau, lap);
}

TEST(Taubin, ZeroMuIsLaplacian) {
  const auto m = oracle::jittered(makeIcosphere(2), 0.05, 2);
  const auto topo = buildTopology(m);
  EXPECT_EQ(taubinSmooth(m, topo, {6, 0.4, 0.0}), laplacianSmooth(m, topo, {6, 0.4}));
}

TEST(Smoothing, BoundaryFrozen) {
  const auto g = oracle::jittered(makeGrid(6), 0.2, 5);
  const auto topo = buildTopology(g);
  const auto out = taubinSmooth(g, topo);
  for (std::size_t v = 0; v < g.vertexCount(); ++v) {
    if (topo.isBoundary(v)) EXPECT_EQ(out.vertices[v], g.vertices[v]);
  }
}

TEST(Smoothing, RejectsInvalidParameters) {
  const auto m = makeIcosphere(1);
  const auto topo = buildTopology(m);
  EXPECT_THROW(laplacianSmooth(m, topo, {10, 1.5}), InvalidArgument);
  EXPECT_THROW(laplacianSmooth(m, topo, {10, -0.1}), InvalidArgument);
  EXPECT_THROW(laplacianSmooth(m, topo, {-1, 0.5}), InvalidArgument);
  EXPECT_THROW(taubinSmooth(m, topo, {10, 0.0, -0.53}), InvalidArgument);
  EXPECT_THROW(taubinSmooth(m, topo, {10, 0.5, -0.4}), InvalidArgument);
  EXPECT_THROW(taubinSmooth(m, topo, {10, 0.5, 0.3}), InvalidArgument);
}
