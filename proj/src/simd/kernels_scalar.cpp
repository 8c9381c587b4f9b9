#include <algorithm>
#include <cmath>
#include <limits>

#include "gcf/simd.hpp"

namespace gcf::simd {

namespace {

double minAbsProjectionScalar(Soa3View normals, Soa3View edges) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t n = 0; n < normals.size; ++n) {
    const double nx = normals.x[n], ny = normals.y[n], nz = normals.z[n];
    for (std::size_t e = 0; e < edges.size; ++e) {
      const double d = std::fabs(nx * edges.x[e] + ny * edges.y[e] + nz * edges.z[e]);
      best = std::min(best, d);
    }
  }
  return best;
}

void crossBatchScalar(Soa3View a, Soa3View b, Soa3Span out, double* lengths) {
  for (std::size_t k = 0; k < a.size; ++k) {
    const double cx = a.y[k] * b.z[k] - a.z[k] * b.y[k];
    const double cy = a.z[k] * b.x[k] - a.x[k] * b.z[k];
    const double cz = a.x[k] * b.y[k] - a.y[k] * b.x[k];
    out.x[k] = cx;
    out.y[k] = cy;
    out.z[k] = cz;
    lengths[k] = std::sqrt(cx * cx + cy * cy + cz * cz);
  }
}

// Four interleaved lanes, element i feeding lane i % 4.
DistanceSums distanceSumsScalar(std::span<const Vec3> a, std::span<const Vec3> b) {
  double sum[4] = {0.0, 0.0, 0.0, 0.0};
  double mx[4] = {0.0, 0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double dx = a[i].x - b[i].x, dy = a[i].y - b[i].y, dz = a[i].z - b[i].z;
    const double d = std::sqrt(dx * dx + dy * dy + dz * dz);
    sum[i % 4] += d;
    mx[i % 4] = std::max(mx[i % 4], d);
  }
  return {(sum[0] + sum[1]) + (sum[2] + sum[3]), std::max(std::max(mx[0], mx[1]), std::max(mx[2], mx[3]))};
}

}  // namespace

namespace detail {
const KernelTable kScalarKernels{Isa::Scalar, &minAbsProjectionScalar, &crossBatchScalar, &distanceSumsScalar};
}  // namespace detail

}  // namespace gcf::simd
