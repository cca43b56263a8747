#pragma once

#include <cstddef>
#include <cstdint>

#include "dynmask/kernels/kernels.hpp"

// Internal: per-backend implementations linked into the dispatch table.

namespace dynmask::kernels {

namespace scalar {
std::size_t count_set(const std::uint8_t* m, std::size_t n);
std::size_t count_intersection(const std::uint8_t* a, const std::uint8_t* b, std::size_t n);
void zero_where_set(float* depth, const std::uint8_t* mask, std::size_t n);
void or_bytes(std::uint8_t* dst, const std::uint8_t* src, std::size_t n);
MaskedDepthStats masked_depth_stats(const float* depth, const std::uint8_t* mask, std::size_t n);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define DYNMASK_KERNELS_X86 1
namespace avx2 {
std::size_t count_set(const std::uint8_t* m, std::size_t n);
std::size_t count_intersection(const std::uint8_t* a, const std::uint8_t* b, std::size_t n);
void zero_where_set(float* depth, const std::uint8_t* mask, std::size_t n);
void or_bytes(std::uint8_t* dst, const std::uint8_t* src, std::size_t n);
MaskedDepthStats masked_depth_stats(const float* depth, const std::uint8_t* mask, std::size_t n);
}  // namespace avx2
#endif

#if defined(__aarch64__) || defined(_M_ARM64)
#define DYNMASK_KERNELS_NEON 1
namespace neon {
std::size_t count_set(const std::uint8_t* m, std::size_t n);
std::size_t count_intersection(const std::uint8_t* a, const std::uint8_t* b, std::size_t n);
void zero_where_set(float* depth, const std::uint8_t* mask, std::size_t n);
void or_bytes(std::uint8_t* dst, const std::uint8_t* src, std::size_t n);
MaskedDepthStats masked_depth_stats(const float* depth, const std::uint8_t* mask, std::size_t n);
}  // namespace neon
#endif

}  // namespace dynmask::kernels
