#pragma once

#include <cstddef>
#include <span>
#include <string_view>

#include "gcf/vec3.hpp"

// Data-parallel inner loops with a scalar reference and SIMD variants.
//
// Every variant produces results bit-identical to the scalar reference: products
// are never fused, per-element operation order is fixed, and reductions use
// four interleaved partial accumulators in all variants. The active table is
// picked once from the CPU (override with GCF_SIMD=scalar|avx2).
namespace gcf::simd {

enum class Isa { Scalar, Avx2 };

/// Read-only structure-of-arrays view of `size` 3-vectors.
struct Soa3View {
  const double* x = nullptr;
  const double* y = nullptr;
  const double* z = nullptr;
  std::size_t size = 0;
};

struct Soa3Span {
  double* x = nullptr;
  double* y = nullptr;
  double* z = nullptr;
  std::size_t size = 0;
};

struct DistanceSums {
  double sum = 0.0;
  double max = 0.0;
};

struct KernelTable {
  Isa isa;
  /// min over every (normal, edge) pair of |<n, e>|; +inf if either set is empty.
  double (*minAbsProjection)(Soa3View normals, Soa3View edges);
  /// out[k] = a[k] x b[k] and lengths[k] = |out[k]|, for k < a.size.
  void (*crossBatch)(Soa3View a, Soa3View b, Soa3Span out, double* lengths);
  /// Sum and max over i of |a[i] - b[i]|. Spans must have equal length.
  DistanceSums (*distanceSums)(std::span<const Vec3> a, std::span<const Vec3> b);
};

bool isaAvailable(Isa isa);
std::string_view isaName(Isa isa);
/// Throws InvalidArgument for an unknown name.
Isa parseIsa(std::string_view name);

const KernelTable& kernelsFor(Isa isa);
const KernelTable& kernels();
Isa activeIsa();
/// Switches the process-wide table. Not safe while kernels run on other threads.
void setActiveIsa(Isa isa);

namespace detail {
extern const KernelTable kScalarKernels;
#if GCF_HAVE_AVX2
extern const KernelTable kAvx2Kernels;
#endif
}  // namespace detail

}  // namespace gcf::simd
