#include "nutgraph/simd/kernels.hpp"

#include <bit>
#include <cmath>

namespace nutgraph::simd {
namespace {

void axpy_mod_scalar(double* y, const double* x, double f, double p, double pinv,
                     std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    double v = std::fma(f, x[i], y[i]);
    double q = std::floor(v * pinv);
    double r = std::fma(-q, p, v);
    if (r < 0.0) r += p;
    if (r >= p) r -= p;
    y[i] = r;
  }
}

std::uint64_t and_popcount_scalar(const std::uint64_t* a, const std::uint64_t* b,
                                  std::size_t n) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += std::popcount(a[i] & b[i]);
  return total;
}

constexpr KernelTable kScalar{Isa::scalar, &axpy_mod_scalar, &and_popcount_scalar};

}  // namespace

const KernelTable& scalar_kernels() { return kScalar; }

}  // namespace nutgraph::simd
