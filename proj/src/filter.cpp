#include "gcf/filter.hpp"

#include <cmath>
#include <string>

#include <tbb/blocked_range.h>
#include <tbb/parallel_for.h>
#include <tbb/task_arena.h>

#include "gcf/curvature.hpp"
#include "gcf/errors.hpp"
#include "gcf/simd.hpp"

namespace gcf {

namespace {

constexpr double kDegenerate = 1e-14;

// SoA buffers for one vertex's ring, reused across vertices on a thread.
struct RingScratch {
  std::vector<double> ex, ey, ez;
  std::vector<double> ax, ay, az, bx, by, bz;
  std::vector<double> cx, cy, cz, len;
  std::vector<double> nx, ny, nz;

  void resize(std::size_t m) {
    for (auto* v : {&ex, &ey, &ez, &ax, &ay, &az, &bx, &by, &bz, &cx, &cy, &cz, &len}) v->resize(m);
    for (auto* v : {&nx, &ny, &nz}) v->resize(m + 1);
  }
  simd::Soa3View edges(std::size_t m) const { return {ex.data(), ey.data(), ez.data(), m}; }
  simd::Soa3View lhs(std::size_t m) const { return {ax.data(), ay.data(), az.data(), m}; }
  simd::Soa3View rhs(std::size_t m) const { return {bx.data(), by.data(), bz.data(), m}; }
  simd::Soa3Span crosses(std::size_t m) { return {cx.data(), cy.data(), cz.data(), m}; }
};

RingScratch& threadScratch() {
  thread_local RingScratch scratch;
  return scratch;
}

void loadEdges(const Vec3& center, std::span<const VertexIndex> ring, std::span<const Vec3> positions,
               RingScratch& s) {
  for (std::size_t k = 0; k < ring.size(); ++k) {
    const Vec3 e = positions[ring[k]] - center;
    s.ex[k] = e.x, s.ey[k] = e.y, s.ez[k] = e.z;
  }
}

// Wedge cross products e_k x e_{k+1} around a closed ring, summed in ring order.
std::optional<Vec3> wedgeNormal(std::size_t m, RingScratch& s) {
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t next = k + 1 == m ? 0 : k + 1;
    s.ax[k] = s.ex[k], s.ay[k] = s.ey[k], s.az[k] = s.ez[k];
    s.bx[k] = s.ex[next], s.by[k] = s.ey[next], s.bz[k] = s.ez[next];
  }
  simd::kernels().crossBatch(s.lhs(m), s.rhs(m), s.crosses(m), s.len.data());
  Vec3 sum;
  double maxLen = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    sum += Vec3{s.cx[k], s.cy[k], s.cz[k]};
    maxLen = std::max(maxLen, s.len[k]);
  }
  const double length = norm(sum);
  if (length == 0.0 || length < kDegenerate * maxLen) return std::nullopt;
  return Vec3{sum.x / length, sum.y / length, sum.z / length};
}

// Neighbor normals (r_{k-1} - r_k) x (r_{k+1} - r_k) around a closed ring.
void neighborCrosses(std::span<const VertexIndex> ring, std::span<const Vec3> positions, RingScratch& s) {
  const std::size_t m = ring.size();
  for (std::size_t k = 0; k < m; ++k) {
    const Vec3& here = positions[ring[k]];
    const Vec3 a = positions[ring[k == 0 ? m - 1 : k - 1]] - here;
    const Vec3 b = positions[ring[k + 1 == m ? 0 : k + 1]] - here;
    s.ax[k] = a.x, s.ay[k] = a.y, s.az[k] = a.z;
    s.bx[k] = b.x, s.by[k] = b.y, s.bz[k] = b.z;
  }
  simd::kernels().crossBatch(s.lhs(m), s.rhs(m), s.crosses(m), s.len.data());
}

std::optional<Vec3> differentialDirection(const Vec3& center, std::span<const VertexIndex> ring,
                                          std::span<const Vec3> positions, double scale) {
  if (ring.empty()) return std::nullopt;
  Vec3 sum;
  for (VertexIndex u : ring) sum += positions[u];
  const double m = static_cast<double>(ring.size());
  const Vec3 delta = center - Vec3{sum.x / m, sum.y / m, sum.z / m};
  const double length = norm(delta);
  if (!(length >= kDegenerate * scale) || length == 0.0) return std::nullopt;
  return Vec3{-delta.x / length, -delta.y / length, -delta.z / length};
}

// Appends the normal set {vertex normal} + {valid neighbor normals} and returns its size.
std::size_t gatherNormals(std::span<const VertexIndex> ring, std::span<const Vec3> positions,
                          std::optional<Vec3> vertexNormal, double scale, RingScratch& s) {
  std::size_t count = 0;
  if (vertexNormal) {
    s.nx[0] = vertexNormal->x, s.ny[0] = vertexNormal->y, s.nz[0] = vertexNormal->z;
    count = 1;
  }
  neighborCrosses(ring, positions, s);
  const double threshold = kDegenerate * scale * scale;
  for (std::size_t k = 0; k < ring.size(); ++k) {
    const double l = s.len[k];
    if (!(l >= threshold) || l == 0.0) continue;
    s.nx[count] = s.cx[k] / l, s.ny[count] = s.cy[k] / l, s.nz[count] = s.cz[k] / l;
    ++count;
  }
  return count;
}

}  // namespace

std::optional<Vec3> movingDirection(std::size_t vertex, std::span<const Vec3> positions, const MeshTopology& topology,
                                    double scale) {
  return differentialDirection(positions[vertex], topology.ring(vertex), positions, scale);
}

std::optional<Vec3> neighborNormal(std::size_t vertex, std::size_t k, std::span<const Vec3> positions,
                                   const MeshTopology& topology, double scale) {
  const auto ring = topology.ring(vertex);
  const std::size_t m = ring.size();
  if (!topology.isManifoldFan(vertex) || k >= m || m < 3) return std::nullopt;
  if (topology.isBoundary(vertex) && (k == 0 || k + 1 == m)) return std::nullopt;
  const Vec3& here = positions[ring[k]];
  const Vec3 c = cross(positions[ring[k == 0 ? m - 1 : k - 1]] - here, positions[ring[k + 1 == m ? 0 : k + 1]] - here);
  const double l = norm(c);
  if (!(l >= kDegenerate * scale * scale) || l == 0.0) return std::nullopt;
  return Vec3{c.x / l, c.y / l, c.z / l};
}

std::optional<Vec3> ringVertexNormal(std::size_t vertex, std::span<const Vec3> positions,
                                     const MeshTopology& topology) {
  if (!topology.isInterior(vertex)) return std::nullopt;
  const auto ring = topology.ring(vertex);
  RingScratch& s = threadScratch();
  s.resize(ring.size());
  loadEdges(positions[vertex], ring, positions, s);
  return wedgeNormal(ring.size(), s);
}

std::optional<double> minProjectionDistance(std::size_t vertex, std::span<const Vec3> positions,
                                            const MeshTopology& topology, std::optional<Vec3> vertexNormal,
                                            double scale) {
  if (!topology.isInterior(vertex)) return std::nullopt;
  const auto ring = topology.ring(vertex);
  RingScratch& s = threadScratch();
  s.resize(ring.size());
  const std::size_t count = gatherNormals(ring, positions, vertexNormal, scale, s);
  if (count == 0) return std::nullopt;
  loadEdges(positions[vertex], ring, positions, s);
  return simd::kernels().minAbsProjection({s.nx.data(), s.ny.data(), s.nz.data(), count}, s.edges(ring.size()));
}

Vec3 filteredPosition(std::size_t vertex, std::span<const Vec3> positions, const MeshTopology& topology,
                      double scale) {
  const Vec3& current = positions[vertex];
  if (!topology.isInterior(vertex)) return current;
  const auto ring = topology.ring(vertex);
  const auto direction = differentialDirection(current, ring, positions, scale);
  if (!direction) return current;

  const std::size_t m = ring.size();
  RingScratch& s = threadScratch();
  s.resize(m);
  loadEdges(current, ring, positions, s);
  const auto normal = wedgeNormal(m, s);
  const std::size_t count = gatherNormals(ring, positions, normal, scale, s);
  if (count == 0) return current;
  const double d = simd::kernels().minAbsProjection({s.nx.data(), s.ny.data(), s.nz.data(), count}, s.edges(m));
  return current + *direction * d;
}

void gcfStep(std::span<Vec3> positions, const MeshTopology& topology, const DomainColoring& coloring, double scale,
             unsigned threads) {
  std::vector<Vec3> staged;
  const std::span<const Vec3> readView(positions.data(), positions.size());
  for (const auto& domain : coloring.domains) {
    staged.resize(domain.size());
    auto body = [&](std::size_t begin, std::size_t end) {
      for (std::size_t t = begin; t < end; ++t) staged[t] = filteredPosition(domain[t], readView, topology, scale);
    };
    if (threads == 1) {
      body(0, domain.size());
    } else {
      tbb::parallel_for(tbb::blocked_range<std::size_t>(0, domain.size(), 256),
                        [&](const tbb::blocked_range<std::size_t>& r) { body(r.begin(), r.end()); });
    }
    for (std::size_t t = 0; t < domain.size(); ++t) positions[domain[t]] = staged[t];
  }
}

FilterResult gcfFilter(const TriangleMesh& mesh, const MeshTopology& topology, const DomainColoring& coloring,
                       const FilterConfig& config) {
  if (config.iterations < 1) {
    throw InvalidArgument("iteration count must be at least 1, got " + std::to_string(config.iterations));
  }
  if (coloring.colorOf.size() != mesh.vertexCount() || topology.vertexCount() != mesh.vertexCount()) {
    throw CountMismatch("topology/coloring do not match the mesh vertex count");
  }

  FilterResult result;
  result.mesh = mesh;
  if (mesh.faces.empty()) return result;
  const double scale = meanEdgeLength(mesh);

  if (config.captureTrace) {
    result.trace.emplace();
    result.trace->gcePerIteration.reserve(static_cast<std::size_t>(config.iterations) + 1);
    result.trace->gcePerIteration.push_back(gaussianCurvatureEnergy(result.mesh, topology));
  }

  auto run = [&](unsigned threads) {
    for (int it = 0; it < config.iterations; ++it) {
      gcfStep(result.mesh.vertices, topology, coloring, scale, threads);
      if (result.trace) result.trace->gcePerIteration.push_back(gaussianCurvatureEnergy(result.mesh, topology));
    }
  };
  if (config.threads == 1) {
    run(1);
  } else {
    tbb::task_arena arena(config.threads == 0 ? tbb::task_arena::automatic : static_cast<int>(config.threads));
    arena.execute([&] { run(config.threads); });
  }
  return result;
}

}  // namespace gcf
