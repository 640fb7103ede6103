#include <arm_neon.h>

#include "dotconf/simd/kernels.hpp"

namespace dotconf::simd::neon {

// vmull_s32 widens two int32 lanes to exact int64 products.

void dot_row(const std::int64_t* pin, std::size_t dim, const std::int64_t* coords,
             std::size_t stride, std::size_t count, std::int64_t* out) {
  std::size_t j = 0;
  for (; j + 2 <= count; j += 2) {
    int64x2_t acc = vdupq_n_s64(0);
    for (std::size_t c = 0; c < dim; ++c) {
      const int32x2_t p = vdup_n_s32(static_cast<std::int32_t>(pin[c]));
      const int64x2_t x = vld1q_s64(coords + c * stride + j);
      acc = vaddq_s64(acc, vmull_s32(p, vmovn_s64(x)));
    }
    vst1q_s64(out + j, acc);
  }
  for (; j < count; ++j) {
    std::int64_t s = 0;
    for (std::size_t c = 0; c < dim; ++c) s += pin[c] * coords[c * stride + j];
    out[j] = s;
  }
}

std::size_t count_equal(const std::int64_t* values, std::size_t count, std::int64_t target) {
  const int64x2_t t = vdupq_n_s64(target);
  std::size_t n = 0;
  std::size_t j = 0;
  for (; j + 2 <= count; j += 2) {
    const uint64x2_t eq = vceqq_s64(vld1q_s64(values + j), t);
    n += static_cast<std::size_t>(vgetq_lane_u64(eq, 0) & 1) +
         static_cast<std::size_t>(vgetq_lane_u64(eq, 1) & 1);
  }
  for (; j < count; ++j) n += values[j] == target;
  return n;
}

}  // namespace dotconf::simd::neon
