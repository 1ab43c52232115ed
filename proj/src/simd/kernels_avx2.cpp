#include "nutgraph/simd/kernels.hpp"

#include <immintrin.h>

#include <bit>
#include <cmath>

namespace nutgraph::simd {
namespace {

void axpy_mod_avx2(double* y, const double* x, double f, double p, double pinv,
                   std::size_t n) {
  const __m256d vf = _mm256_set1_pd(f);
  const __m256d vp = _mm256_set1_pd(p);
  const __m256d vpinv = _mm256_set1_pd(pinv);
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d v = _mm256_fmadd_pd(vf, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
    __m256d q = _mm256_floor_pd(_mm256_mul_pd(v, vpinv));
    __m256d r = _mm256_fnmadd_pd(q, vp, v);
    r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), vp));
    r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, vp, _CMP_GE_OQ), vp));
    _mm256_storeu_pd(y + i, r);
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

// Nibble lookup popcount (no VPOPCNTQ on plain AVX2).
inline __m256i popcount_bytes(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  __m256i lo = _mm256_and_si256(v, low_mask);
  __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  return _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
}

std::uint64_t and_popcount_avx2(const std::uint64_t* a, const std::uint64_t* b,
                                std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    __m256i bytes = popcount_bytes(_mm256_and_si256(va, vb));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(bytes, _mm256_setzero_si256()));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) total += std::popcount(a[i] & b[i]);
  return total;
}

constexpr KernelTable kAvx2{Isa::avx2, &axpy_mod_avx2, &and_popcount_avx2};

}  // namespace

const KernelTable& avx2_kernels() { return kAvx2; }

}  // namespace nutgraph::simd
