#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dotconf/geometry.hpp"

namespace dotconf {

/// A point set rescaled by the lcm of its coordinate denominators so that
/// every coordinate is an integer. For frames A and B the exact dot product
/// of points a_i, b_j is raw_ij / (A.scale * B.scale), so equality of dot
/// products within one (A, B) pairing is equality of the integer raw_ij.
struct IntegerFrame {
  std::size_t dim = 0;
  std::size_t size = 0;
  BigInt scale = 1;
  std::vector<std::int64_t> coords;  // coordinate-major: coords[c * size + i]
  std::int64_t max_abs = 0;

  std::int64_t at(std::size_t c, std::size_t i) const { return coords[c * size + i]; }
  std::vector<std::int64_t> point(std::size_t i) const;
};

/// Nullopt when some scaled coordinate leaves the 32-bit lane range.
std::optional<IntegerFrame> make_integer_frame(const PointSet& points);

/// True when every raw dot product between the two frames fits in int64.
bool fits_product(const IntegerFrame& a, const IntegerFrame& b);

/// Exact value of a raw frame product.
ExactScalar frame_value(std::int64_t raw, const IntegerFrame& a, const IntegerFrame& b);

/// The integer raw product that corresponds to `value`, if there is one that
/// is representable; nullopt means no pair of the frames can realize it.
std::optional<std::int64_t> frame_target(const ExactScalar& value, const IntegerFrame& a,
                                         const IntegerFrame& b);

/// Express `p` in the scale of `frame`; nullopt if it leaves the lane range
/// or is not an integer there.
std::optional<std::vector<std::int64_t>> rescale_into(const Point& p, const BigInt& scale);

}  // namespace dotconf
