#include "dotconf/random.hpp"

#include <limits>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace dotconf {

std::int64_t PointRng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return lo + static_cast<std::int64_t>(draw % span);
}

namespace {

void check_capacity(std::size_t count, std::size_t dim, std::int64_t box) {
  if (box < 1) throw std::invalid_argument("box must be positive");
  long double cells = 1;
  for (std::size_t i = 0; i < dim; ++i) cells *= static_cast<long double>(2 * box + 1);
  if (static_cast<long double>(count) > (cells - 1) / 2) {
    throw std::invalid_argument("box too small for the requested number of points");
  }
}

}  // namespace

PointSet random_point_set(std::size_t count, std::size_t dim, std::int64_t box, std::uint64_t seed) {
  check_capacity(count, dim, box);
  PointRng rng(seed);
  std::vector<Point> points;
  std::unordered_set<Point, PointHash> seen;
  while (points.size() < count) {
    std::vector<ExactScalar> c(dim);
    for (auto& v : c) v = ExactScalar(static_cast<long>(rng.uniform(-box, box)));
    Point p(std::move(c));
    if (p.is_origin() || !seen.insert(p).second) continue;
    points.push_back(std::move(p));
  }
  return PointSet(dim, std::move(points));
}

PointSet random_radially_distinct_set(std::size_t count, std::int64_t box, std::uint64_t seed) {
  check_capacity(count, 2, box);
  // primitive directions in the box are plentiful, but guard against loops
  if (static_cast<std::int64_t>(count) > 2 * box * box) {
    throw std::invalid_argument("box too small for radially distinct points");
  }
  PointRng rng(seed);
  std::vector<Point> points;
  std::set<Direction> used;
  while (points.size() < count) {
    Point p{ExactScalar(static_cast<long>(rng.uniform(-box, box))),
            ExactScalar(static_cast<long>(rng.uniform(-box, box)))};
    if (p.is_origin()) continue;
    if (!used.insert(radial_direction(p)).second) continue;
    points.push_back(std::move(p));
  }
  return PointSet(2, std::move(points));
}

PointSet integer_grid(std::size_t side, std::size_t dim, std::int64_t offset) {
  std::vector<Point> points;
  std::vector<std::size_t> idx(dim, 0);
  if (side == 0) return PointSet(dim);
  while (true) {
    std::vector<ExactScalar> c(dim);
    for (std::size_t i = 0; i < dim; ++i) c[i] = ExactScalar(static_cast<long>(offset + static_cast<std::int64_t>(idx[i])));
    points.emplace_back(std::move(c));
    std::size_t pos = dim;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < side) break;
      idx[pos] = 0;
      if (pos == 0) return PointSet(dim, std::move(points));
    }
  }
}

}  // namespace dotconf
