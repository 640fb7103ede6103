#pragma once

#include <cstddef>
#include <cstdint>

// Integer inner loops behind the exact counters. Every table computes the
// same results bit for bit; the generic table is the reference.
//
// Inputs are 64-bit lanes whose values fit in a signed 32-bit integer, so a
// lane product is exact in 64 bits. Callers guarantee that the per-row sum
// cannot overflow (see IntegerFrame::fits_product).

namespace dotconf::simd {

inline constexpr std::int64_t kLaneLimit = 2147483647;  // INT32_MAX

/// out[j] = sum_c pin[c] * coords[c * stride + j], for j in [0, count).
using DotRowFn = void (*)(const std::int64_t* pin, std::size_t dim, const std::int64_t* coords,
                          std::size_t stride, std::size_t count, std::int64_t* out);

/// Number of j in [0, count) with values[j] == target.
using CountEqualFn = std::size_t (*)(const std::int64_t* values, std::size_t count,
                                     std::int64_t target);

struct KernelTable {
  const char* name;
  DotRowFn dot_row;
  CountEqualFn count_equal;
};

const KernelTable& generic_kernels();

/// Null when the variant was not compiled in or the CPU lacks it.
const KernelTable* avx2_kernels();
const KernelTable* neon_kernels();

/// Best variant for this CPU, unless DOTCONF_SIMD=generic is set in the
/// environment or an override is installed.
const KernelTable& active_kernels();

/// Pins the active table (tests and benchmarks). Pass nullptr to restore
/// runtime selection.
void override_kernels(const KernelTable* table);

namespace generic {
void dot_row(const std::int64_t* pin, std::size_t dim, const std::int64_t* coords,
             std::size_t stride, std::size_t count, std::int64_t* out);
std::size_t count_equal(const std::int64_t* values, std::size_t count, std::int64_t target);
}  // namespace generic

namespace avx2 {
void dot_row(const std::int64_t* pin, std::size_t dim, const std::int64_t* coords,
             std::size_t stride, std::size_t count, std::int64_t* out);
std::size_t count_equal(const std::int64_t* values, std::size_t count, std::int64_t target);
}  // namespace avx2

namespace neon {
void dot_row(const std::int64_t* pin, std::size_t dim, const std::int64_t* coords,
             std::size_t stride, std::size_t count, std::int64_t* out);
std::size_t count_equal(const std::int64_t* values, std::size_t count, std::int64_t target);
}  // namespace neon

}  // namespace dotconf::simd
