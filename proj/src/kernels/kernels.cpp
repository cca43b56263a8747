#include "dynmask/kernels/kernels.hpp"

#include "kernels_impl.hpp"

namespace dynmask::kernels {

namespace scalar {

std::size_t count_set(const std::uint8_t* m, std::size_t n) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += m[i] != 0;
  return c;
}

std::size_t count_intersection(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += (a[i] != 0) & (b[i] != 0);
  return c;
}

void zero_where_set(float* depth, const std::uint8_t* mask, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (mask[i]) depth[i] = 0.0f;
}

void or_bytes(std::uint8_t* dst, const std::uint8_t* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] |= src[i];
}

MaskedDepthStats masked_depth_stats(const float* depth, const std::uint8_t* mask, std::size_t n) {
  MaskedDepthStats s;
  for (std::size_t i = 0; i < n; ++i) {
    if (mask[i] && depth[i] > 0.0f) {
      s.sum += static_cast<double>(depth[i]);
      ++s.count;
    }
  }
  return s;
}

}  // namespace scalar

namespace {

struct DispatchTable {
  std::size_t (*count_set)(const std::uint8_t*, std::size_t);
  std::size_t (*count_intersection)(const std::uint8_t*, const std::uint8_t*, std::size_t);
  void (*zero_where_set)(float*, const std::uint8_t*, std::size_t);
  void (*or_bytes)(std::uint8_t*, const std::uint8_t*, std::size_t);
  MaskedDepthStats (*masked_depth_stats)(const float*, const std::uint8_t*, std::size_t);
};

constexpr DispatchTable kScalarTable = {
    scalar::count_set, scalar::count_intersection, scalar::zero_where_set,
    scalar::or_bytes, scalar::masked_depth_stats};

#ifdef DYNMASK_KERNELS_X86
constexpr DispatchTable kAvx2Table = {
    avx2::count_set, avx2::count_intersection, avx2::zero_where_set,
    avx2::or_bytes, avx2::masked_depth_stats};
#endif

#ifdef DYNMASK_KERNELS_NEON
constexpr DispatchTable kNeonTable = {
    neon::count_set, neon::count_intersection, neon::zero_where_set,
    neon::or_bytes, neon::masked_depth_stats};
#endif

bool cpu_supports(Backend b) {
  switch (b) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
#ifdef DYNMASK_KERNELS_X86
      return __builtin_cpu_supports("avx2") != 0;
#else
      return false;
#endif
    case Backend::neon:
#ifdef DYNMASK_KERNELS_NEON
      return true;  // baseline on aarch64
#else
      return false;
#endif
  }
  return false;
}

Backend best_backend() {
  if (cpu_supports(Backend::avx2)) return Backend::avx2;
  if (cpu_supports(Backend::neon)) return Backend::neon;
  return Backend::scalar;
}

const DispatchTable* table_for(Backend b) {
  switch (b) {
    case Backend::scalar:
      return &kScalarTable;
#ifdef DYNMASK_KERNELS_X86
    case Backend::avx2:
      return &kAvx2Table;
#endif
#ifdef DYNMASK_KERNELS_NEON
    case Backend::neon:
      return &kNeonTable;
#endif
    default:
      return &kScalarTable;
  }
}

struct Dispatch {
  Backend backend;
  const DispatchTable* table;
  Dispatch() : backend(best_backend()), table(table_for(backend)) {}
};

Dispatch& dispatch() {
  static Dispatch d;
  return d;
}

}  // namespace

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
    case Backend::neon:
      return "neon";
  }
  return "?";
}

Backend active_backend() { return dispatch().backend; }

bool backend_supported(Backend b) { return cpu_supports(b); }

bool set_backend(Backend b) {
  if (!cpu_supports(b)) return false;
  dispatch().backend = b;
  dispatch().table = table_for(b);
  return true;
}

void reset_backend() { set_backend(best_backend()); }

std::size_t count_set(const std::uint8_t* m, std::size_t n) {
  return dispatch().table->count_set(m, n);
}

std::size_t count_intersection(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
  return dispatch().table->count_intersection(a, b, n);
}

void zero_where_set(float* depth, const std::uint8_t* mask, std::size_t n) {
  dispatch().table->zero_where_set(depth, mask, n);
}

void or_bytes(std::uint8_t* dst, const std::uint8_t* src, std::size_t n) {
  dispatch().table->or_bytes(dst, src, n);
}

MaskedDepthStats masked_depth_stats(const float* depth, const std::uint8_t* mask, std::size_t n) {
  return dispatch().table->masked_depth_stats(depth, mask, n);
}

}  // namespace dynmask::kernels
