#include "nutgraph/simd/kernels.hpp"

#include <arm_neon.h>

#include <bit>
#include <cmath>

namespace nutgraph::simd {
namespace {

void axpy_mod_neon(double* y, const double* x, double f, double p, double pinv,
                   std::size_t n) {
  const float64x2_t vf = vdupq_n_f64(f);
  const float64x2_t vp = vdupq_n_f64(p);
  const float64x2_t vpinv = vdupq_n_f64(pinv);
  const float64x2_t zero = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t v = vfmaq_f64(vld1q_f64(y + i), vf, vld1q_f64(x + i));
    float64x2_t q = vrndmq_f64(vmulq_f64(v, vpinv));
    float64x2_t r = vfmsq_f64(v, q, vp);
    uint64x2_t neg = vcltq_f64(r, zero);
    r = vaddq_f64(r, vreinterpretq_f64_u64(vandq_u64(neg, vreinterpretq_u64_f64(vp))));
    uint64x2_t over = vcgeq_f64(r, vp);
    r = vsubq_f64(r, vreinterpretq_f64_u64(vandq_u64(over, vreinterpretq_u64_f64(vp))));
    vst1q_f64(y + i, r);
  }
  for (; i < n; ++i) {
    double v = std::fma(f, x[i], y[i]);
    double q = std::floor(v * pinv);
    double r = std::fma(-q, p, v);
    if (r < 0.0) r += p;
    if (r >= p) r -= p;
    y[i] = r;
  }
}

std::uint64_t and_popcount_neon(const std::uint64_t* a, const std::uint64_t* b,
                                std::size_t n) {
  uint64x2_t acc = vdupq_n_u64(0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    uint8x16_t bytes = vcntq_u8(vreinterpretq_u8_u64(vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i))));
    acc = vpadalq_u32(acc, vpaddlq_u16(vpaddlq_u8(bytes)));
  }
  std::uint64_t total = vgetq_lane_u64(acc, 0) + vgetq_lane_u64(acc, 1);
  for (; i < n; ++i) total += std::popcount(a[i] & b[i]);
  return total;
}

constexpr KernelTable kNeon{Isa::neon, &axpy_mod_neon, &and_popcount_neon};

}  // namespace

const KernelTable& neon_kernels() { return kNeon; }

}  // namespace nutgraph::simd
