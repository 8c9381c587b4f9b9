// Compiled with -mavx2 only; callers reach it through the dispatch table after
// a CPUID check.
#include <immintrin.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "gcf/simd.hpp"

namespace gcf::simd {

namespace {

inline __m256d absPd(__m256d v) { return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v); }

double minAbsProjectionAvx2(Soa3View normals, Soa3View edges) {
  const std::size_t full = edges.size & ~std::size_t{3};
  __m256d best = _mm256_set1_pd(std::numeric_limits<double>::infinity());
  double tail = std::numeric_limits<double>::infinity();
  for (std::size_t n = 0; n < normals.size; ++n) {
    const __m256d nx = _mm256_set1_pd(normals.x[n]);
    const __m256d ny = _mm256_set1_pd(normals.y[n]);
    const __m256d nz = _mm256_set1_pd(normals.z[n]);
    for (std::size_t e = 0; e < full; e += 4) {
      const __m256d xx = _mm256_mul_pd(nx, _mm256_loadu_pd(edges.x + e));
      const __m256d yy = _mm256_mul_pd(ny, _mm256_loadu_pd(edges.y + e));
      const __m256d zz = _mm256_mul_pd(nz, _mm256_loadu_pd(edges.z + e));
      best = _mm256_min_pd(best, absPd(_mm256_add_pd(_mm256_add_pd(xx, yy), zz)));
    }
    for (std::size_t e = full; e < edges.size; ++e) {
      tail = std::min(tail, std::fabs(normals.x[n] * edges.x[e] + normals.y[n] * edges.y[e] + normals.z[n] * edges.z[e]));
    }
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, best);
  return std::min({lanes[0], lanes[1], lanes[2], lanes[3], tail});
}

void crossBatchAvx2(Soa3View a, Soa3View b, Soa3Span out, double* lengths) {
  const std::size_t full = a.size & ~std::size_t{3};
  for (std::size_t k = 0; k < full; k += 4) {
    const __m256d ax = _mm256_loadu_pd(a.x + k), ay = _mm256_loadu_pd(a.y + k), az = _mm256_loadu_pd(a.z + k);
    const __m256d bx = _mm256_loadu_pd(b.x + k), by = _mm256_loadu_pd(b.y + k), bz = _mm256_loadu_pd(b.z + k);
    const __m256d cx = _mm256_sub_pd(_mm256_mul_pd(ay, bz), _mm256_mul_pd(az, by));
    const __m256d cy = _mm256_sub_pd(_mm256_mul_pd(az, bx), _mm256_mul_pd(ax, bz));
    const __m256d cz = _mm256_sub_pd(_mm256_mul_pd(ax, by), _mm256_mul_pd(ay, bx));
    _mm256_storeu_pd(out.x + k, cx);
    _mm256_storeu_pd(out.y + k, cy);
    _mm256_storeu_pd(out.z + k, cz);
    const __m256d sq = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(cx, cx), _mm256_mul_pd(cy, cy)), _mm256_mul_pd(cz, cz));
    _mm256_storeu_pd(lengths + k, _mm256_sqrt_pd(sq));
  }
  for (std::size_t k = full; k < a.size; ++k) {
    const double cx = a.y[k] * b.z[k] - a.z[k] * b.y[k];
    const double cy = a.z[k] * b.x[k] - a.x[k] * b.z[k];
    const double cz = a.x[k] * b.y[k] - a.y[k] * b.x[k];
    out.x[k] = cx;
    out.y[k] = cy;
    out.z[k] = cz;
    lengths[k] = std::sqrt(cx * cx + cy * cy + cz * cz);
  }
}

DistanceSums distanceSumsAvx2(std::span<const Vec3> a, std::span<const Vec3> b) {
  const std::size_t full = a.size() & ~std::size_t{3};
  __m256d sum = _mm256_setzero_pd();
  __m256d mx = _mm256_setzero_pd();
  for (std::size_t i = 0; i < full; i += 4) {
    const __m256d dx = _mm256_sub_pd(_mm256_set_pd(a[i + 3].x, a[i + 2].x, a[i + 1].x, a[i].x),
                                     _mm256_set_pd(b[i + 3].x, b[i + 2].x, b[i + 1].x, b[i].x));
    const __m256d dy = _mm256_sub_pd(_mm256_set_pd(a[i + 3].y, a[i + 2].y, a[i + 1].y, a[i].y),
                                     _mm256_set_pd(b[i + 3].y, b[i + 2].y, b[i + 1].y, b[i].y));
    const __m256d dz = _mm256_sub_pd(_mm256_set_pd(a[i + 3].z, a[i + 2].z, a[i + 1].z, a[i].z),
                                     _mm256_set_pd(b[i + 3].z, b[i + 2].z, b[i + 1].z, b[i].z));
    const __m256d d = _mm256_sqrt_pd(
        _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy)), _mm256_mul_pd(dz, dz)));
    sum = _mm256_add_pd(sum, d);
    mx = _mm256_max_pd(mx, d);
  }
  alignas(32) double s[4];
  alignas(32) double m[4];
  _mm256_store_pd(s, sum);
  _mm256_store_pd(m, mx);
  for (std::size_t i = full; i < a.size(); ++i) {
    const double dx = a[i].x - b[i].x, dy = a[i].y - b[i].y, dz = a[i].z - b[i].z;
    const double d = std::sqrt(dx * dx + dy * dy + dz * dz);
    s[i % 4] += d;
    m[i % 4] = std::max(m[i % 4], d);
  }
  return {(s[0] + s[1]) + (s[2] + s[3]), std::max(std::max(m[0], m[1]), std::max(m[2], m[3]))};
}

}  // namespace

namespace detail {
const KernelTable kAvx2Kernels{Isa::Avx2, &minAbsProjectionAvx2, &crossBatchAvx2, &distanceSumsAvx2};
}  // namespace detail

}  // namespace gcf::simd
