#include "dotconf/simd/kernels.hpp"

namespace dotconf::simd::generic {

void dot_row(const std::int64_t* pin, std::size_t dim, const std::int64_t* coords,
             std::size_t stride, std::size_t count, std::int64_t* out) {
  for (std::size_t j = 0; j < count; ++j) out[j] = 0;
  for (std::size_t c = 0; c < dim; ++c) {
    const std::int64_t p = pin[c];
    const std::int64_t* col = coords + c * stride;
    for (std::size_t j = 0; j < count; ++j) out[j] += p * col[j];
  }
}

std::size_t count_equal(const std::int64_t* values, std::size_t count, std::int64_t target) {
  std::size_t n = 0;
  for (std::size_t j = 0; j < count; ++j) n += values[j] == target;
  return n;
}

}  // namespace dotconf::simd::generic
