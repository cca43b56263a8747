#pragma once

#include <cstddef>
#include <cstdint>

// Pixel-level primitives behind the mask/depth operations. Every primitive
// has a scalar reference implementation plus SIMD variants (AVX2 on x86-64,
// NEON on aarch64) selected at runtime; the variants are equivalence-tested
// against the scalar path. Masks are dense 0/1 byte grids, depth is float
// meters with 0 meaning "no reading".

namespace dynmask::kernels {

enum class Backend { scalar, avx2, neon };

const char* backend_name(Backend b);

/// Backend currently used by the dispatch table.
Backend active_backend();

/// Forces a backend. Returns false (and leaves the table unchanged) if the
/// CPU does not support it.
bool set_backend(Backend b);

/// Restores the automatic choice (best supported backend).
void reset_backend();

bool backend_supported(Backend b);

/// Number of nonzero bytes.
std::size_t count_set(const std::uint8_t* m, std::size_t n);

/// Number of positions where both bytes are nonzero.
std::size_t count_intersection(const std::uint8_t* a, const std::uint8_t* b, std::size_t n);

/// depth[i] = 0 wherever mask[i] != 0.
void zero_where_set(float* depth, const std::uint8_t* mask, std::size_t n);

/// dst[i] |= src[i]. dst and src must not overlap.
void or_bytes(std::uint8_t* dst, const std::uint8_t* src, std::size_t n);

struct MaskedDepthStats {
  double sum = 0.0;
  std::size_t count = 0;
};

/// Sum and count of depth[i] over positions with mask[i] != 0 and depth[i] > 0.
MaskedDepthStats masked_depth_stats(const float* depth, const std::uint8_t* mask, std::size_t n);

}  // namespace dynmask::kernels
