#include <doctest.h>

#include <map>

#include "dotconf/descent.hpp"
#include "dotconf/random.hpp"
#include "oracle.hpp"

using namespace dotconf;

TEST_CASE("affine dimension") {
  const std::vector<Point> none;
  CHECK(affine_dimension(none) == 0);
  const std::vector<Point> one{make_point({1, 2, 3})};
  CHECK(affine_dimension(one) == 0);
  const std::vector<Point> line{make_point({1, 1, 1}), make_point({2, 2, 2}), make_point({5, 5, 5})};
  CHECK(affine_dimension(line) == 1);
  // not through the origin, but still a plane
  const std::vector<Point> plane{make_point({1, 0, 1}), make_point({0, 1, 1}), make_point({3, 7, 1}), make_point({2, 2, 1})};
  CHECK(affine_dimension(plane) == 2);
  const std::vector<Point> tetra{make_point({1, 0, 0}), make_point({0, 1, 0}), make_point({0, 0, 1}), make_point({1, 1, 1})};
  CHECK(affine_dimension(tetra) == 3);
  const std::vector<Point> frac{Point{ExactScalar(1, 2), ExactScalar(1, 3)}, Point{ExactScalar(1), ExactScalar(2, 3)},
                                Point{ExactScalar(3, 2), ExactScalar(1)}};
  CHECK(affine_dimension(frac) == 1);
}

TEST_CASE("descent on the 3x3x3 grid") {
  const PointSet E = integer_grid(3, 3);
  const auto tr = hyperplane_descent(E);
  REQUIRE_FALSE(tr.levels.empty());
  std::size_t t1 = 0;
  for (const auto& p : E) t1 = std::max(t1, oracle::pinned_size(p, E));
  const auto& first = tr.levels.front();
  CHECK(first.t == t1);
  CHECK(first.points_before == 27);
  CHECK(first.points_after * first.t >= 27);
  CHECK(first.pigeonhole_ok);
  // the chosen level set is the heaviest for that pin
  std::map<ExactScalar, std::size_t> sizes;
  for (const auto& x : E) ++sizes[dot(E[first.pin], x)];
  std::size_t heaviest = 0;
  for (const auto& [v, c] : sizes) heaviest = std::max(heaviest, c);
  CHECK(sizes[first.level] == first.points_after);
  CHECK(first.points_after == heaviest);
  CHECK(tr.stop_reason == "planar");
  CHECK(tr.final_affine_dim <= 2);
  CHECK(tr.overall_max == t1);
  CHECK(tr.dominates_components);
  CHECK(tr.pigeonhole_ok);
}

TEST_CASE("a planar set stops at once") {
  std::vector<Point> pts;
  for (long x = 1; x <= 4; ++x) {
    for (long y = 1; y <= 4; ++y) pts.push_back(make_point({x, y, 2}));
  }
  const PointSet E(3, pts);
  const auto tr = hyperplane_descent(E);
  CHECK(tr.levels.empty());
  CHECK(tr.stop_reason == "planar");
  CHECK(tr.final_points.size() == 16);
  CHECK(tr.final_affine_dim == 2);
  std::size_t best = 0;
  for (const auto& p : E) best = std::max(best, oracle::pinned_size(p, E));
  CHECK(tr.planar_max == best);
}

TEST_CASE("descent bookkeeping on random sets") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const std::size_t dim = 3 + seed % 2;
    const PointSet E = random_point_set(40, dim, 3, seed);
    CAPTURE(seed);
    const auto tr = hyperplane_descent(E, ExecPolicy{1 + static_cast<unsigned>(seed % 3), false});
    std::size_t prev = E.size();
    for (const auto& lv : tr.levels) {
      CHECK(lv.points_before == prev);
      CHECK(lv.points_after < lv.points_before);
      CHECK(lv.pigeonhole_ok);
      CHECK(lv.points_after * lv.t >= lv.counted_before);
      CHECK(tr.overall_max >= lv.t);
      prev = lv.points_after;
    }
    CHECK(tr.final_points.size() == prev);
    std::vector<Point> fin;
    for (std::size_t i : tr.final_points) fin.push_back(E[i]);
    CHECK(affine_dimension(fin) == tr.final_affine_dim);
    std::size_t best = 0;
    for (const auto& p : E) best = std::max(best, oracle::pinned_size(p, E));
    CHECK(tr.overall_max == best);
    CHECK(tr.overall_max >= tr.planar_max);
    CHECK(tr.dominates_components);
    // the same trace for any thread count
    const auto again = hyperplane_descent(E, ExecPolicy{1, false});
    CHECK(again.final_points == tr.final_points);
    CHECK(again.levels.size() == tr.levels.size());
  }
}

TEST_CASE("descent input checks") {
  CHECK_THROWS_AS(hyperplane_descent(integer_grid(3, 2)), std::invalid_argument);
  CHECK_THROWS_AS(hyperplane_descent(integer_grid(3, 3, 0)), std::invalid_argument);  // origin
  CHECK_THROWS_AS(hyperplane_descent(PointSet(3, {make_point({1, 1, 1})})), std::invalid_argument);
}
