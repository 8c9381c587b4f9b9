#include <atomic>
#include <cstdlib>
#include <string>

#include "gcf/errors.hpp"
#include "gcf/simd.hpp"

namespace gcf::simd {

namespace {

bool cpuHasAvx2() {
#if GCF_HAVE_AVX2 && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa initialIsa() {
  if (const char* env = std::getenv("GCF_SIMD"); env != nullptr && *env != '\0') {
    const Isa requested = parseIsa(env);
    if (isaAvailable(requested)) return requested;
  }
  return isaAvailable(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<const KernelTable*>& activeTable() {
  static std::atomic<const KernelTable*> table{&kernelsFor(initialIsa())};
  return table;
}

}  // namespace

bool isaAvailable(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2: return cpuHasAvx2();
  }
  return false;
}

std::string_view isaName(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

Isa parseIsa(std::string_view name) {
  if (name == "scalar") return Isa::Scalar;
  if (name == "avx2") return Isa::Avx2;
  throw InvalidArgument("unknown SIMD target '" + std::string(name) + "'");
}

const KernelTable& kernelsFor(Isa isa) {
  if (!isaAvailable(isa)) throw InvalidArgument("SIMD target '" + std::string(isaName(isa)) + "' is not available");
#if GCF_HAVE_AVX2
  if (isa == Isa::Avx2) return detail::kAvx2Kernels;
#endif
  return detail::kScalarKernels;
}

const KernelTable& kernels() { return *activeTable().load(std::memory_order_acquire); }

Isa activeIsa() { return kernels().isa; }

void setActiveIsa(Isa isa) { activeTable().store(&kernelsFor(isa), std::memory_order_release); }

}  // namespace gcf::simd
