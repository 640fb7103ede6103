#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "dotconf/scalar.hpp"

namespace dotconf {

class Point {
 public:
  Point() = default;
  explicit Point(std::vector<ExactScalar> coords) : coords_(std::move(coords)) {}
  Point(std::initializer_list<ExactScalar> coords) : coords_(coords) {}

  std::size_t dim() const { return coords_.size(); }
  const ExactScalar& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const ExactScalar> coords() const { return coords_; }
  bool is_origin() const;
  std::string str() const;
  std::size_t hash() const;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point& a, const Point& b) {
    return std::lexicographical_compare_three_way(a.coords_.begin(), a.coords_.end(),
                                                  b.coords_.begin(), b.coords_.end());
  }

 private:
  std::vector<ExactScalar> coords_;
};

struct PointHash {
  std::size_t operator()(const Point& p) const noexcept { return p.hash(); }
};

/// Ordered list of pairwise distinct points sharing one dimension >= 2.
class PointSet {
 public:
  /// Throws std::invalid_argument on dim < 2, a point of the wrong
  /// dimension, or a duplicate point.
  PointSet(std::size_t dim, std::vector<Point> points);
  explicit PointSet(std::size_t dim) : PointSet(dim, {}) {}

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  std::span<const Point> points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  std::optional<std::size_t> index_of(const Point& p) const;
  bool contains(const Point& p) const { return index_of(p).has_value(); }

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.dim_ == b.dim_ && a.points_ == b.points_;
  }

 private:
  std::size_t dim_;
  std::vector<Point> points_;
  std::unordered_map<Point, std::size_t, PointHash> index_;
};

/// Level set {x : normal . x = value}; a line in the plane, a hyperplane in
/// higher dimension.
class AlphaHyperplane {
 public:
  AlphaHyperplane(Point normal, ExactScalar value);

  const Point& normal() const { return normal_; }
  const ExactScalar& value() const { return value_; }
  bool contains(const Point& x) const;

 private:
  Point normal_;
  ExactScalar value_;
};

/// Canonical primitive integer vector of a line through the origin: gcd of
/// the coordinates is 1 and the first nonzero coordinate is positive.
class Direction {
 public:
  explicit Direction(const Point& p);

  const Point& primitive() const { return primitive_; }
  friend bool operator==(const Direction&, const Direction&) = default;
  friend auto operator<=>(const Direction& a, const Direction& b) {
    return a.primitive_ <=> b.primitive_;
  }

 private:
  Point primitive_;
};

/// Exact sum of coordinate products. Throws std::invalid_argument when the
/// dimensions differ.
ExactScalar dot(const Point& p, const Point& q);

/// Throws std::invalid_argument for the origin.
AlphaHyperplane alpha_hyperplane(const Point& p, const ExactScalar& alpha);

/// Throws std::invalid_argument for the origin.
Direction radial_direction(const Point& p);

Point add(const Point& p, const Point& q);
Point scale(const ExactScalar& lambda, const Point& p);
Point make_point(std::initializer_list<long> coords);

}  // namespace dotconf
