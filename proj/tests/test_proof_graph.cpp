#include <doctest.h>

#include <set>

#include "dotconf/counting.hpp"
#include "dotconf/proof_graph.hpp"
#include "dotconf/random.hpp"
#include "oracle.hpp"

using namespace dotconf;

namespace {

// sign of the cross product (b - a) x (c - a)
int orient(const Point& a, const Point& b, const Point& c) {
  return ((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])).sign();
}

bool cross_ref(const Point& a, const Point& b, const Point& c, const Point& d) {
  const int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

std::size_t brute_crossings(const ProofGraphStats& st) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < st.edges.size(); ++i) {
    for (std::size_t j = i + 1; j < st.edges.size(); ++j) {
      const auto& e = st.edges[i];
      const auto& f = st.edges[j];
      c += cross_ref(st.vertices[e.a], st.vertices[e.b], st.vertices[f.a], st.vertices[f.b]);
    }
  }
  return c;
}

}  // namespace

TEST_CASE("worked three-point example has a double edge") {
  const PointSet E(2, {make_point({1, 0}), make_point({2, 0}), make_point({1, 1})});
  const auto st = proof_multigraph(E, E);
  CHECK(st.v == 3);
  CHECK(st.e == 3);
  CHECK(st.m == 2);
  CHECK(st.drawing_crossings == 0);
  CHECK(st.segments == 2);
  bool doubled = false;
  for (const auto& ed : st.edges) {
    const std::set<Point> ends{st.vertices[ed.a], st.vertices[ed.b]};
    if (ends == std::set<Point>{make_point({1, 0}), make_point({1, 1})}) doubled = ed.multiplicity == 2;
  }
  CHECK(doubled);
  CHECK(st.bound_holds);
}

TEST_CASE("points on the x-axis give no edges") {
  const PointSet E(2, {make_point({1, 0}), make_point({2, 0}), make_point({3, 0})});
  const auto st = proof_multigraph(E, E);
  CHECK(st.e == 0);
  CHECK(st.m == 0);
  CHECK(st.lines == 0);
  CHECK(st.t == 3);
}

TEST_CASE("proper crossings") {
  const auto p = [](long x, long y) { return make_point({x, y}); };
  CHECK(segments_cross_properly(p(0, 0), p(2, 2), p(0, 2), p(2, 0)));
  CHECK_FALSE(segments_cross_properly(p(0, 0), p(2, 2), p(2, 2), p(4, 0)));  // shared endpoint
  CHECK_FALSE(segments_cross_properly(p(0, 0), p(4, 0), p(2, 0), p(2, 3)));  // touches at an endpoint
  CHECK_FALSE(segments_cross_properly(p(0, 0), p(4, 0), p(1, 0), p(3, 0)));  // collinear overlap
  CHECK_FALSE(segments_cross_properly(p(0, 0), p(4, 0), p(0, 1), p(4, 1)));  // parallel
  CHECK_FALSE(segments_cross_properly(p(0, 0), p(1, 1), p(3, 0), p(0, 3)));  // would cross if extended
  CHECK(segments_cross_properly(Point{ExactScalar(1, 3), ExactScalar(0)}, Point{ExactScalar(1, 3), ExactScalar(1)},
                                Point{ExactScalar(0), ExactScalar(1, 2)}, Point{ExactScalar(1), ExactScalar(1, 2)}));
}

TEST_CASE("edge counts and crossings match brute force") {
  for (std::uint64_t seed = 1; seed <= 16; ++seed) {
    const std::size_t n = 12 + 3 * seed;
    const PointSet E = seed % 2 ? random_radially_distinct_set(n, 10, seed) : random_point_set(n, 2, 5, seed);
    const PointSet F = seed % 4 == 0 ? random_point_set(n / 2, 2, 4, seed + 100) : E;
    CAPTURE(seed);
    const auto st = proof_multigraph(E, F);
    CHECK(st.e == oracle::proof_edges(E, F));
    std::size_t t = 0;
    for (const auto& p : E) t = std::max(t, oracle::pinned_size(p, F));
    CHECK(st.t == t);
    CHECK(st.drawing_crossings == brute_crossings(st));
    std::size_t sum = 0, m = 0;
    for (const auto& ed : st.edges) {
      sum += ed.multiplicity;
      m = std::max(m, ed.multiplicity);
    }
    CHECK(sum == st.e);
    CHECK(m == st.m);
    CHECK(st.segments == st.edges.size());
    if (st.e > 0) CHECK(st.m >= 1);
    BigInt bound = static_cast<unsigned long>(E.size() * E.size());
    bound *= static_cast<unsigned long>(st.t * st.t);
    CHECK(st.crossing_bound == bound);
    CHECK(st.bound_holds == (BigInt(static_cast<unsigned long>(st.drawing_crossings)) <= bound));
    CHECK(st.weighted_crossings >= BigInt(static_cast<unsigned long>(st.drawing_crossings)));
  }
}

TEST_CASE("multiplicity is one without radial coincidences") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const PointSet E = random_radially_distinct_set(30, 15, seed);
    REQUIRE(radial_histogram(E).max == 1);
    const auto st = proof_multigraph(E, E);
    if (st.e > 0) CHECK(st.m == 1);
  }
}

TEST_CASE("edges along one line follow each pin's alpha-line") {
  // every edge joins two points of F with equal products against some pin
  const PointSet E = random_point_set(25, 2, 4, 5);
  const auto st = proof_multigraph(E, E);
  for (const auto& ed : st.edges) {
    bool found = false;
    for (const auto& p : E) {
      const ExactScalar a = dot(p, st.vertices[ed.a]);
      if (!a.is_zero() && a == dot(p, st.vertices[ed.b])) found = true;
    }
    CHECK(found);
  }
}

TEST_CASE("thread count does not change the graph") {
  const PointSet E = random_point_set(50, 2, 6, 9);
  const auto a = proof_multigraph(E, E, ExecPolicy{1, false});
  const auto b = proof_multigraph(E, E, ExecPolicy{6, false});
  CHECK(a.e == b.e);
  CHECK(a.drawing_crossings == b.drawing_crossings);
  CHECK(a.weighted_crossings == b.weighted_crossings);
  REQUIRE(a.edges.size() == b.edges.size());
  for (std::size_t i = 0; i < a.edges.size(); ++i) {
    CHECK(a.edges[i].a == b.edges[i].a);
    CHECK(a.edges[i].b == b.edges[i].b);
    CHECK(a.edges[i].multiplicity == b.edges[i].multiplicity);
  }
}

TEST_CASE("proof graph input checks") {
  CHECK_THROWS_AS(proof_multigraph(integer_grid(2, 3), integer_grid(2, 3)), std::invalid_argument);
  const PointSet with_origin = integer_grid(2, 2, 0);
  CHECK_THROWS_AS(proof_multigraph(with_origin, with_origin), std::invalid_argument);
}
