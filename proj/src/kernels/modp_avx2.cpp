#include "hopfgal/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>

#include <cassert>

namespace hopfgal::kernels::avx2 {

namespace {

// x mod p for lanes x < 2^31 using m = floor(2^31 / p); the quotient estimate
// is q or q - 1, so one conditional subtraction finishes the reduction.
__attribute__((target("avx2"))) inline __m256i barrett31(__m256i x, __m256i m, __m256i p,
                                                         __m256i pm1) {
  __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(x, m), 31);
  __m256i odd = _mm256_srli_epi64(_mm256_mul_epu32(_mm256_srli_epi64(x, 32), m), 31);
  __m256i q = _mm256_blend_epi32(even, _mm256_slli_epi64(odd, 32), 0b10101010);
  __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(q, p));
  __m256i over = _mm256_cmpgt_epi32(r, pm1);
  return _mm256_sub_epi32(r, _mm256_and_si256(over, p));
}

}  // namespace

__attribute__((target("avx2"))) void axpy_mod(std::span<std::uint32_t> dst,
                                              std::span<const std::uint32_t> src,
                                              std::uint32_t c, std::uint32_t p) {
  assert(dst.size() == src.size());
  assert(p < kMaxSimdModulus);
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vpm1 = _mm256_set1_epi32(static_cast<int>(p - 1));
  const __m256i vm = _mm256_set1_epi32(static_cast<int>((1u << 31) / p));
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  std::size_t i = 0;
  const std::size_t n = dst.size();
  for (; i + 8 <= n; i += 8) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst.data() + i));
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src.data() + i));
    __m256i x = _mm256_add_epi32(d, _mm256_mullo_epi32(vc, s));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst.data() + i), barrett31(x, vm, vp, vpm1));
  }
  if (i < n) scalar::axpy_mod(dst.subspan(i), src.subspan(i), c, p);
}

__attribute__((target("avx2"))) void scale_mod(std::span<std::uint32_t> v, std::uint32_t c,
                                               std::uint32_t p) {
  assert(p < kMaxSimdModulus);
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vpm1 = _mm256_set1_epi32(static_cast<int>(p - 1));
  const __m256i vm = _mm256_set1_epi32(static_cast<int>((1u << 31) / p));
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  std::size_t i = 0;
  const std::size_t n = v.size();
  for (; i + 8 <= n; i += 8) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v.data() + i));
    x = _mm256_mullo_epi32(vc, x);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(v.data() + i), barrett31(x, vm, vp, vpm1));
  }
  if (i < n) scalar::scale_mod(v.subspan(i), c, p);
}

}  // namespace hopfgal::kernels::avx2

#endif
