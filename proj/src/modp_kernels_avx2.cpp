// AVX2 variants of the mod-p row kernels. Compiled with -mavx2; only
// reachable after a runtime CPU check, so the rest of the library stays
// portable. Values satisfy v < p + p*(p-1) < 2^31 for p <= 46337, which the
// Barrett reduction below requires.

#include <immintrin.h>

#include "blowup/modp.hpp"

namespace blowup::kernels {

namespace {

// high 32 bits of the lane-wise 32x32 product
inline __m256i mulhi_epu32(__m256i a, __m256i b) {
  __m256i lo = _mm256_srli_epi64(_mm256_mul_epu32(a, b), 32);
  __m256i hi = _mm256_mul_epu32(_mm256_srli_epi64(a, 32), b);
  return _mm256_blend_epi32(lo, hi, 0b10101010);
}

// v mod p for v < 2^31, via q = (v*mu)>>32 and two conditional subtracts
inline __m256i barrett31(__m256i v, __m256i pv, __m256i muv) {
  __m256i q = mulhi_epu32(v, muv);
  __m256i r = _mm256_sub_epi32(v, _mm256_mullo_epi32(q, pv));
  for (int k = 0; k < 2; ++k) {
    __m256i ge = _mm256_cmpeq_epi32(_mm256_max_epu32(r, pv), r);
    r = _mm256_blendv_epi8(r, _mm256_sub_epi32(r, pv), ge);
  }
  return r;
}

void axpy_avx2(uint32_t* dst, const uint32_t* src, size_t n, uint32_t c,
               uint32_t p, uint32_t mu) {
  const __m256i cv = _mm256_set1_epi32(static_cast<int>(c));
  const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i muv = _mm256_set1_epi32(static_cast<int>(mu));
  size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i v = _mm256_add_epi32(d, _mm256_mullo_epi32(cv, s));
    v = barrett31(v, pv, muv);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), v);
  }
  for (; i < n; ++i) {
    dst[i] = static_cast<uint32_t>(
        (dst[i] + static_cast<uint64_t>(c) * src[i]) % p);
  }
}

void scale_avx2(uint32_t* dst, size_t n, uint32_t c, uint32_t p, uint32_t mu) {
  const __m256i cv = _mm256_set1_epi32(static_cast<int>(c));
  const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i muv = _mm256_set1_epi32(static_cast<int>(mu));
  size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i v = barrett31(_mm256_mullo_epi32(cv, d), pv, muv);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), v);
  }
  for (; i < n; ++i) {
    dst[i] = static_cast<uint32_t>(static_cast<uint64_t>(c) * dst[i] % p);
  }
}

const Backend kAvx2{"avx2", axpy_avx2, scale_avx2};

}  // namespace

const Backend* avx2_backend() { return &kAvx2; }

}  // namespace blowup::kernels
