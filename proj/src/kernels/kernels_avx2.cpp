#include <immintrin.h>

#include "kernels_impl.hpp"

// AVX2 variants. Compiled with -mavx2; only reached when the dispatch table
// has verified CPU support.

namespace dynmask::kernels::avx2 {

namespace {

inline std::uint64_t hsum_epi64(__m256i v) {
  const __m128i lo = _mm256_castsi256_si128(v);
  const __m128i hi = _mm256_extracti128_si256(v, 1);
  const __m128i s = _mm_add_epi64(lo, hi);
  return static_cast<std::uint64_t>(_mm_extract_epi64(s, 0)) +
         static_cast<std::uint64_t>(_mm_extract_epi64(s, 1));
}

inline double hsum_pd(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

std::size_t count_set(const std::uint8_t* m, std::size_t n) {
  const __m256i zero = _mm256_setzero_si256();
  const __m256i one = _mm256_set1_epi8(1);
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(m + i));
    const __m256i nz = _mm256_andnot_si256(_mm256_cmpeq_epi8(v, zero), one);
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(nz, zero));
  }
  std::size_t c = hsum_epi64(acc);
  for (; i < n; ++i) c += m[i] != 0;
  return c;
}

std::size_t count_intersection(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
  const __m256i zero = _mm256_setzero_si256();
  const __m256i one = _mm256_set1_epi8(1);
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    const __m256i either_zero =
        _mm256_or_si256(_mm256_cmpeq_epi8(va, zero), _mm256_cmpeq_epi8(vb, zero));
    const __m256i nz = _mm256_andnot_si256(either_zero, one);
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(nz, zero));
  }
  std::size_t c = hsum_epi64(acc);
  for (; i < n; ++i) c += (a[i] != 0) & (b[i] != 0);
  return c;
}

void zero_where_set(float* depth, const std::uint8_t* mask, std::size_t n) {
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m128i m8 = _mm_loadl_epi64(reinterpret_cast<const __m128i*>(mask + i));
    const __m256i m32 = _mm256_cvtepu8_epi32(m8);
    // all-ones lanes where the mask byte is zero, i.e. where depth survives
    const __m256 keep = _mm256_castsi256_ps(_mm256_cmpeq_epi32(m32, zero));
    const __m256 d = _mm256_loadu_ps(depth + i);
    _mm256_storeu_ps(depth + i, _mm256_and_ps(d, keep));
  }
  for (; i < n; ++i)
    if (mask[i]) depth[i] = 0.0f;
}

void or_bytes(std::uint8_t* dst, const std::uint8_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_or_si256(d, s));
  }
  for (; i < n; ++i) dst[i] |= src[i];
}

MaskedDepthStats masked_depth_stats(const float* depth, const std::uint8_t* mask, std::size_t n) {
  const __m256i izero = _mm256_setzero_si256();
  const __m256 fzero = _mm256_setzero_ps();
  __m256d acc_lo = _mm256_setzero_pd();
  __m256d acc_hi = _mm256_setzero_pd();
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m128i m8 = _mm_loadl_epi64(reinterpret_cast<const __m128i*>(mask + i));
    const __m256i m32 = _mm256_cvtepu8_epi32(m8);
    const __m256 mask_zero = _mm256_castsi256_ps(_mm256_cmpeq_epi32(m32, izero));
    const __m256 d = _mm256_loadu_ps(depth + i);
    const __m256 positive = _mm256_cmp_ps(d, fzero, _CMP_GT_OQ);
    const __m256 keep = _mm256_andnot_ps(mask_zero, positive);
    const __m256 vals = _mm256_and_ps(d, keep);
    count += static_cast<std::size_t>(__builtin_popcount(_mm256_movemask_ps(keep)));
    acc_lo = _mm256_add_pd(acc_lo, _mm256_cvtps_pd(_mm256_castps256_ps128(vals)));
    acc_hi = _mm256_add_pd(acc_hi, _mm256_cvtps_pd(_mm256_extractf128_ps(vals, 1)));
  }
  MaskedDepthStats s;
  s.sum = hsum_pd(_mm256_add_pd(acc_lo, acc_hi));
  s.count = count;
  for (; i < n; ++i) {
    if (mask[i] && depth[i] > 0.0f) {
      s.sum += static_cast<double>(depth[i]);
      ++s.count;
    }
  }
  return s;
}

}  // namespace dynmask::kernels::avx2
