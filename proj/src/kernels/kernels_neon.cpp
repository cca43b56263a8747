#include <arm_neon.h>

#include "kernels_impl.hpp"

// NEON variants (aarch64 baseline).

namespace dynmask::kernels::neon {

std::size_t count_set(const std::uint8_t* m, std::size_t n) {
  const uint8x16_t zero = vdupq_n_u8(0);
  const uint8x16_t one = vdupq_n_u8(1);
  std::size_t c = 0;
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    const uint8x16_t v = vld1q_u8(m + i);
    const uint8x16_t nz = vandq_u8(vmvnq_u8(vceqq_u8(v, zero)), one);
    c += vaddlvq_u8(nz);
  }
  for (; i < n; ++i) c += m[i] != 0;
  return c;
}

std::size_t count_intersection(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
  const uint8x16_t zero = vdupq_n_u8(0);
  const uint8x16_t one = vdupq_n_u8(1);
  std::size_t c = 0;
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    const uint8x16_t va = vld1q_u8(a + i);
    const uint8x16_t vb = vld1q_u8(b + i);
    const uint8x16_t na = vmvnq_u8(vceqq_u8(va, zero));
    const uint8x16_t nb = vmvnq_u8(vceqq_u8(vb, zero));
    c += vaddlvq_u8(vandq_u8(vandq_u8(na, nb), one));
  }
  for (; i < n; ++i) c += (a[i] != 0) & (b[i] != 0);
  return c;
}

void zero_where_set(float* depth, const std::uint8_t* mask, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const uint32x4_t m32 = {mask[i], mask[i + 1], mask[i + 2], mask[i + 3]};
    const uint32x4_t keep = vceqq_u32(m32, vdupq_n_u32(0));
    const uint32x4_t d = vreinterpretq_u32_f32(vld1q_f32(depth + i));
    vst1q_f32(depth + i, vreinterpretq_f32_u32(vandq_u32(d, keep)));
  }
  for (; i < n; ++i)
    if (mask[i]) depth[i] = 0.0f;
}

void or_bytes(std::uint8_t* dst, const std::uint8_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16)
    vst1q_u8(dst + i, vorrq_u8(vld1q_u8(dst + i), vld1q_u8(src + i)));
  for (; i < n; ++i) dst[i] |= src[i];
}

MaskedDepthStats masked_depth_stats(const float* depth, const std::uint8_t* mask, std::size_t n) {
  float64x2_t acc_lo = vdupq_n_f64(0.0);
  float64x2_t acc_hi = vdupq_n_f64(0.0);
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const uint32x4_t m32 = {mask[i], mask[i + 1], mask[i + 2], mask[i + 3]};
    const uint32x4_t nz = vmvnq_u32(vceqq_u32(m32, vdupq_n_u32(0)));
    const float32x4_t d = vld1q_f32(depth + i);
    const uint32x4_t positive = vcgtq_f32(d, vdupq_n_f32(0.0f));
    const uint32x4_t keep = vandq_u32(nz, positive);
    const float32x4_t vals = vreinterpretq_f32_u32(vandq_u32(vreinterpretq_u32_f32(d), keep));
    count += vaddvq_u32(vandq_u32(keep, vdupq_n_u32(1)));
    acc_lo = vaddq_f64(acc_lo, vcvt_f64_f32(vget_low_f32(vals)));
    acc_hi = vaddq_f64(acc_hi, vcvt_f64_f32(vget_high_f32(vals)));
  }
  MaskedDepthStats s;
  s.sum = vaddvq_f64(vaddq_f64(acc_lo, acc_hi));
  s.count = count;
  for (; i < n; ++i) {
    if (mask[i] && depth[i] > 0.0f) {
      s.sum += static_cast<double>(depth[i]);
      ++s.count;
    }
  }
  return s;
}

}  // namespace dynmask::kernels::neon
