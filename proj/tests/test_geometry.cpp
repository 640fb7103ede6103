#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "dotconf/error.hpp"
#include "dotconf/geometry.hpp"
#include "dotconf/point_io.hpp"
#include "dotconf/random.hpp"

using namespace dotconf;

namespace {

ExactScalar random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-40, 40);
  std::uniform_int_distribution<long> den(1, 12);
  return ExactScalar(BigInt(num(rng)), BigInt(den(rng)));
}

Point random_point(std::mt19937_64& rng, std::size_t dim) {
  std::vector<ExactScalar> c;
  for (std::size_t i = 0; i < dim; ++i) c.push_back(random_rational(rng));
  return Point(std::move(c));
}

Point rotate(const Point& p) {
  const ExactScalar a(3, 5);
  const ExactScalar b(4, 5);
  return Point{a * p[0] + b * p[1], -b * p[0] + a * p[1]};
}

PointSet read_text(const std::string& text) {
  std::istringstream in(text);
  return read_point_set(in);
}

int parse_error_line(const std::string& text) {
  try {
    read_text(text);
  } catch (const ParseError& e) {
    return static_cast<int>(e.line());
  }
  return -1;
}

}  // namespace

TEST_CASE("dot of orthogonal axes is zero") { CHECK(dot(make_point({1, 0}), make_point({0, 1})).is_zero()); }

TEST_CASE("(6,0) dotted with any point of the column x=8 gives 48") {
  for (long y : {-7L, 0L, 1L, 5L, 1000L}) CHECK(dot(make_point({6, 0}), make_point({8, y})) == ExactScalar(48));
  CHECK(dot(make_point({6, 0}), Point{ExactScalar(8), ExactScalar(1, 3)}) == ExactScalar(48));
}

TEST_CASE("rational dot product") {
  const Point p{ExactScalar(3, 4), ExactScalar(5, 16)};
  const Point q{ExactScalar(4), ExactScalar(8, 5)};
  CHECK(dot(p, q) == ExactScalar(7, 2));
}

TEST_CASE("dot rejects mismatched dimensions") {
  CHECK_THROWS_AS(dot(make_point({1, 2}), make_point({1, 2, 3})), std::invalid_argument);
}

TEST_CASE("alpha hyperplanes") {
  const auto l1 = alpha_hyperplane(make_point({1, 0}), 2);
  CHECK(l1.contains(make_point({2, 0})));
  CHECK(l1.contains(make_point({2, -9})));
  CHECK_FALSE(l1.contains(make_point({1, 0})));

  const auto l2 = alpha_hyperplane(make_point({0, 3}), 6);
  CHECK(l2.contains(make_point({17, 2})));
  CHECK_FALSE(l2.contains(make_point({0, 3})));

  const auto l3 = alpha_hyperplane(make_point({1, 1}), 1);
  CHECK(l3.contains(make_point({1, 0})));
  CHECK(l3.contains(make_point({0, 1})));
  CHECK_FALSE(l3.contains(make_point({1, 1})));

  CHECK_THROWS_AS(alpha_hyperplane(make_point({0, 0}), 1), std::invalid_argument);
}

TEST_CASE("radial directions are primitive with a positive leading coordinate") {
  CHECK(radial_direction(make_point({2, 0})).primitive() == make_point({1, 0}));
  CHECK(radial_direction(make_point({3, 3})).primitive() == make_point({1, 1}));
  CHECK(radial_direction(make_point({-4, -6})).primitive() == make_point({2, 3}));
  CHECK(radial_direction(make_point({0, -5})).primitive() == make_point({0, 1}));
  CHECK(radial_direction(Point{ExactScalar(1, 2), ExactScalar(1, 3)}).primitive() == make_point({3, 2}));
  CHECK(radial_direction(make_point({6, -4, 2})).primitive() == make_point({3, -2, 1}));
  CHECK(radial_direction(make_point({1, 2})) == radial_direction(make_point({-3, -6})));
  CHECK_THROWS_AS(radial_direction(make_point({0, 0})), std::invalid_argument);
}

TEST_CASE("point sets reject bad shapes") {
  CHECK_THROWS_AS(PointSet(1, {}), std::invalid_argument);
  CHECK_THROWS_AS(PointSet(2, {make_point({1, 2}), make_point({1, 2})}), std::invalid_argument);
  CHECK_THROWS_AS(PointSet(2, {make_point({1, 2, 3})}), std::invalid_argument);
  const PointSet s(2, {make_point({1, 2}), make_point({3, 4})});
  CHECK(s.index_of(make_point({3, 4})) == 1u);
  CHECK_FALSE(s.contains(make_point({4, 3})));
}

TEST_CASE("reading .pts text") {
  const PointSet a = read_text("d 2\n1 0\n2 0\n");
  CHECK(a.dim() == 2);
  REQUIRE(a.size() == 2);
  CHECK(a[0] == make_point({1, 0}));
  CHECK(a[1] == make_point({2, 0}));

  const PointSet b = read_text("d 2\n3/4 5/16");
  REQUIRE(b.size() == 1);
  CHECK(b[0] == (Point{ExactScalar(3, 4), ExactScalar(5, 16)}));

  const PointSet c = read_text("# header\n\nd 3\n  6/8 -2/4 0\n# note\n1 1 1\n");
  REQUIRE(c.size() == 2);
  CHECK(c[0] == (Point{ExactScalar(3, 4), ExactScalar(-1, 2), ExactScalar(0)}));
}

TEST_CASE(".pts errors carry the offending line") {
  CHECK(parse_error_line("d 2\n1 0\n1 0") == 3);
  CHECK(parse_error_line("d 2\n1 0\n1 2 3\n") == 3);
  CHECK(parse_error_line("d 2\n1 x\n") == 2);
  CHECK(parse_error_line("d 2\n1 1/0\n") == 2);
  CHECK(parse_error_line("x 2\n") == 1);
  CHECK(parse_error_line("d 1\n") == 1);
  CHECK(parse_error_line("d 2\n# c\n\n4/2 2\n2 1\n2 2/1\n") == 6);
}

TEST_CASE("written .pts text is reduced") {
  const PointSet s(2, {Point{ExactScalar(6, 8), ExactScalar(-4, 2)}});
  CHECK(to_pts_string(s) == "d 2\n3/4 -2\n");
}

TEST_CASE("dot is symmetric and bilinear") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const std::size_t dim = 2 + static_cast<std::size_t>(i % 3);
    const Point p = random_point(rng, dim), q = random_point(rng, dim), r = random_point(rng, dim);
    const ExactScalar lambda = random_rational(rng);
    CHECK(dot(p, q) == dot(q, p));
    CHECK(dot(p, add(q, r)) == dot(p, q) + dot(p, r));
    CHECK(dot(scale(lambda, p), q) == lambda * dot(p, q));
  }
}

TEST_CASE("distinct pins give distinct alpha-lines") {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    const Point p = random_point(rng, 2), q = random_point(rng, 2);
    const ExactScalar alpha = random_rational(rng);
    if (p == q || p.is_origin() || q.is_origin() || alpha.is_zero()) continue;
    // two points of l_alpha(p); the lines are equal iff both lie on l_alpha(q)
    const ExactScalar n2 = dot(p, p);
    const Point x0 = scale(alpha / n2, p);
    const Point x1 = add(x0, Point{-p[1], p[0]});
    const auto lp = alpha_hyperplane(p, alpha);
    const auto lq = alpha_hyperplane(q, alpha);
    REQUIRE(lp.contains(x0));
    REQUIRE(lp.contains(x1));
    CHECK_FALSE((lq.contains(x0) && lq.contains(x1)));
    ++checked;
  }
  CHECK(checked > 150);
}

TEST_CASE("dot is invariant under an exact rotation") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const Point p = random_point(rng, 2), q = random_point(rng, 2);
    CHECK(dot(rotate(p), rotate(q)) == dot(p, q));
  }
}

TEST_CASE("dot scales quadratically") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    const Point p = random_point(rng, 3), q = random_point(rng, 3);
    const ExactScalar lambda = random_rational(rng);
    CHECK(dot(scale(lambda, p), scale(lambda, q)) == lambda * lambda * dot(p, q));
  }
}

TEST_CASE("read after write is the identity") {
  std::mt19937_64 rng(19);
  for (int round = 0; round < 20; ++round) {
    const std::size_t dim = 2 + static_cast<std::size_t>(round % 3);
    std::vector<Point> pts;
    for (int i = 0; i < 30; ++i) {
      Point p = random_point(rng, dim);
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(std::move(p));
    }
    const PointSet s(dim, pts);
    std::ostringstream out;
    write_point_set(s, out);
    CHECK(read_text(out.str()) == s);
  }
  const PointSet r = random_point_set(50, 3, 9, 5);
  CHECK(read_text(to_pts_string(r)) == r);
}
