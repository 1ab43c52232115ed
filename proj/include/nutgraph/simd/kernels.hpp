#pragma once

// Data-parallel inner loops shared by the modular elimination and the
// bit-packed adjacency code. Every kernel has a scalar reference version;
// vector variants are picked at runtime and must agree with it bit for bit.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace nutgraph::simd {

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa);

/// Largest modulus the floating-point residue kernels accept. Products of two
/// residues plus a residue stay below 2^53 and are therefore exact in a double.
inline constexpr std::uint64_t kMaxF64Modulus = (std::uint64_t{1} << 26);

struct KernelTable {
  Isa isa;
  /// y[i] = (y[i] + f * x[i]) mod p for residues stored as exact doubles in
  /// [0, p). Requires 0 <= f < p < kMaxF64Modulus and pinv = 1.0 / p.
  void (*axpy_mod)(double* y, const double* x, double f, double p, double pinv,
                   std::size_t n);
  /// popcount(a[i] & b[i]) summed over n words.
  std::uint64_t (*and_popcount)(const std::uint64_t* a, const std::uint64_t* b,
                                std::size_t n);
};

const KernelTable& scalar_kernels();
#if defined(NUTGRAPH_HAVE_AVX2)
const KernelTable& avx2_kernels();
#endif
#if defined(NUTGRAPH_HAVE_NEON)
const KernelTable& neon_kernels();
#endif

/// True when the variant was compiled in and the running CPU supports it.
bool available(Isa isa);

/// Kernel table for a specific ISA; throws std::runtime_error if unavailable.
const KernelTable& kernels_for(Isa isa);

/// Kernels used by the library. Picks the widest available ISA unless the
/// NUTGRAPH_ISA environment variable or force_isa() says otherwise.
const KernelTable& active();

/// Pins the active ISA (std::nullopt restores automatic selection).
void force_isa(std::optional<Isa> isa);

}  // namespace nutgraph::simd
