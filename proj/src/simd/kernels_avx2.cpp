#include <immintrin.h>

#include "dotconf/simd/kernels.hpp"

namespace dotconf::simd::avx2 {

// _mm256_mul_epi32 multiplies the sign-extended low 32 bits of each 64-bit
// lane, which is exact for lanes inside kLaneLimit.

void dot_row(const std::int64_t* pin, std::size_t dim, const std::int64_t* coords,
             std::size_t stride, std::size_t count, std::int64_t* out) {
  std::size_t j = 0;
  for (; j + 8 <= count; j += 8) {
    __m256i acc0 = _mm256_setzero_si256();
    __m256i acc1 = _mm256_setzero_si256();
    for (std::size_t c = 0; c < dim; ++c) {
      const __m256i p = _mm256_set1_epi64x(pin[c]);
      const std::int64_t* col = coords + c * stride + j;
      const __m256i x0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(col));
      const __m256i x1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(col + 4));
      acc0 = _mm256_add_epi64(acc0, _mm256_mul_epi32(p, x0));
      acc1 = _mm256_add_epi64(acc1, _mm256_mul_epi32(p, x1));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + j), acc0);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + j + 4), acc1);
  }
  for (; j + 4 <= count; j += 4) {
    __m256i acc = _mm256_setzero_si256();
    for (std::size_t c = 0; c < dim; ++c) {
      const __m256i p = _mm256_set1_epi64x(pin[c]);
      const __m256i x =
          _mm256_loadu_si256(reinterpret_cast<const __m256i*>(coords + c * stride + j));
      acc = _mm256_add_epi64(acc, _mm256_mul_epi32(p, x));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + j), acc);
  }
  for (; j < count; ++j) {
    std::int64_t s = 0;
    for (std::size_t c = 0; c < dim; ++c) s += pin[c] * coords[c * stride + j];
    out[j] = s;
  }
}

std::size_t count_equal(const std::int64_t* values, std::size_t count, std::int64_t target) {
  const __m256i t = _mm256_set1_epi64x(target);
  std::size_t n = 0;
  std::size_t j = 0;
  for (; j + 4 <= count; j += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(values + j));
    const int mask = _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpeq_epi64(v, t)));
    n += static_cast<std::size_t>(__builtin_popcount(static_cast<unsigned>(mask)));
  }
  for (; j < count; ++j) n += values[j] == target;
  return n;
}

}  // namespace dotconf::simd::avx2
