#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "nutgraph/simd/kernels.hpp"

namespace nutgraph::simd {
namespace {

bool cpu_supports(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(NUTGRAPH_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Isa::neon:
#if defined(NUTGRAPH_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const KernelTable* select_default() {
  if (const char* env = std::getenv("NUTGRAPH_ISA")) {
    std::string want(env);
    for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
      if (want == isa_name(isa) && cpu_supports(isa)) return &kernels_for(isa);
    }
  }
  if (cpu_supports(Isa::avx2)) return &kernels_for(Isa::avx2);
  if (cpu_supports(Isa::neon)) return &kernels_for(Isa::neon);
  return &scalar_kernels();
}

std::atomic<const KernelTable*> g_forced{nullptr};

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "unknown";
}

bool available(Isa isa) { return cpu_supports(isa); }

const KernelTable& kernels_for(Isa isa) {
  if (!cpu_supports(isa)) {
    throw std::runtime_error("kernel variant not available: " + std::string(isa_name(isa)));
  }
  switch (isa) {
#if defined(NUTGRAPH_HAVE_AVX2)
    case Isa::avx2: return avx2_kernels();
#endif
#if defined(NUTGRAPH_HAVE_NEON)
    case Isa::neon: return neon_kernels();
#endif
    default: return scalar_kernels();
  }
}

const KernelTable& active() {
  if (const KernelTable* forced = g_forced.load(std::memory_order_acquire)) return *forced;
  static const KernelTable* chosen = select_default();
  return *chosen;
}

void force_isa(std::optional<Isa> isa) {
  g_forced.store(isa ? &kernels_for(*isa) : nullptr, std::memory_order_release);
}

}  // namespace nutgraph::simd
