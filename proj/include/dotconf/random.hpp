#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "dotconf/geometry.hpp"

namespace dotconf {

/// Seeded generator for random point sets: std::mt19937_64, whose output
/// sequence is fixed by the standard. Bounded draws use rejection sampling
/// so results do not depend on the standard library's distributions.
class PointRng {
 public:
  explicit PointRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

/// `count` distinct points with integer coordinates in [-box, box]^dim,
/// origin excluded.
PointSet random_point_set(std::size_t count, std::size_t dim, std::int64_t box, std::uint64_t seed);

/// Like random_point_set in the plane, but no two points share a line
/// through the origin.
PointSet random_radially_distinct_set(std::size_t count, std::int64_t box, std::uint64_t seed);

/// {offset, ..., offset + side - 1}^dim in lexicographic order.
PointSet integer_grid(std::size_t side, std::size_t dim, std::int64_t offset = 1);

}  // namespace dotconf
