#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "dotconf/geometry.hpp"
#include "dotconf/parallel.hpp"

namespace dotconf {

struct DescentLevel {
  std::size_t pin = 0;            // index into the original E
  std::size_t t = 0;              // distinct dot products of the pin within the current set
  ExactScalar level = 0;          // value of the chosen level set
  std::size_t points_before = 0;
  std::size_t points_after = 0;   // |P_i|
  std::size_t counted_before = 0; // points of the current set with a counted product against the pin
  std::size_t affine_dim_before = 0;
  bool pigeonhole_ok = false;     // points_after * t >= counted_before
};

struct DescentTrace {
  std::size_t n = 0;
  std::size_t dim = 0;
  std::vector<DescentLevel> levels;
  std::vector<std::size_t> final_points;  // indices into E of the planar set
  std::size_t final_affine_dim = 0;
  std::size_t planar_pin = 0;             // best pin inside the final set
  std::size_t planar_max = 0;             // its distinct count within the final set
  std::size_t overall_pin = 0;
  std::size_t overall_max = 0;            // max over x in E of |Pi_x(E)|
  double planar_component = 0;            // (n / prod t_i)^(2/3)
  std::string stop_reason;                // "planar", or why the descent stalled
  bool pigeonhole_ok = true;
  /// overall_max dominates every t_i and planar_max
  bool dominates_components = false;
};

/// Exact affine dimension; 0 for fewer than two points.
std::size_t affine_dimension(std::span<const Point> points);

/// Pigeonhole descent through heaviest level sets of dot products until a
/// set of affine dimension at most 2 remains. Pins come from the current
/// set; ties break toward the lowest point index (and, for level sets,
/// toward the level whose first point has the lowest index). Throws
/// std::invalid_argument for d < 3 or |E| < d, or if E contains the origin.
DescentTrace hyperplane_descent(const PointSet& E, const ExecPolicy& policy = {});

}  // namespace dotconf
