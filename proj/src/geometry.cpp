#include "dotconf/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace dotconf {

bool Point::is_origin() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const ExactScalar& c) { return c.is_zero(); });
}

std::string Point::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ",";
    out += coords_[i].str();
  }
  return out + ")";
}

std::size_t Point::hash() const {
  std::size_t h = coords_.size();
  for (const auto& c : coords_) h = h * 1000003u ^ c.hash();
  return h;
}

PointSet::PointSet(std::size_t dim, std::vector<Point> points) : dim_(dim), points_(std::move(points)) {
  if (dim_ < 2) throw std::invalid_argument("point set dimension must be at least 2");
  index_.reserve(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].dim() != dim_) {
      throw std::invalid_argument("point " + points_[i].str() + " has dimension " +
                                  std::to_string(points_[i].dim()) + ", expected " +
                                  std::to_string(dim_));
    }
    if (!index_.emplace(points_[i], i).second) {
      throw std::invalid_argument("duplicate point " + points_[i].str());
    }
  }
}

std::optional<std::size_t> PointSet::index_of(const Point& p) const {
  const auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ExactScalar dot(const Point& p, const Point& q) {
  if (p.dim() != q.dim()) {
    throw std::invalid_argument("dot: dimension mismatch (" + std::to_string(p.dim()) + " vs " +
                                std::to_string(q.dim()) + ")");
  }
  mpq_class sum = 0;
  for (std::size_t i = 0; i < p.dim(); ++i) sum += p[i].raw() * q[i].raw();
  return ExactScalar(std::move(sum));
}

AlphaHyperplane::AlphaHyperplane(Point normal, ExactScalar value)
    : normal_(std::move(normal)), value_(std::move(value)) {
  if (normal_.is_origin()) throw std::invalid_argument("the origin cannot be a pin");
}

bool AlphaHyperplane::contains(const Point& x) const { return dot(normal_, x) == value_; }

AlphaHyperplane alpha_hyperplane(const Point& p, const ExactScalar& alpha) {
  return AlphaHyperplane(p, alpha);
}

Direction::Direction(const Point& p) {
  if (p.is_origin()) throw std::invalid_argument("the origin has no radial direction");
  BigInt lcm = 1;
  for (const auto& c : p.coords()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
  std::vector<BigInt> ints;
  ints.reserve(p.dim());
  BigInt g = 0;
  for (const auto& c : p.coords()) {
    ints.push_back(c.numerator() * (lcm / c.denominator()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
  }
  const auto first = std::find_if(ints.begin(), ints.end(), [](const BigInt& v) { return v != 0; });
  if (*first < 0) g = -g;
  std::vector<ExactScalar> coords;
  coords.reserve(ints.size());
  for (const auto& v : ints) coords.emplace_back(BigInt(v / g));
  primitive_ = Point(std::move(coords));
}

Direction radial_direction(const Point& p) { return Direction(p); }

Point add(const Point& p, const Point& q) {
  if (p.dim() != q.dim()) throw std::invalid_argument("add: dimension mismatch");
  std::vector<ExactScalar> c(p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i) c[i] = p[i] + q[i];
  return Point(std::move(c));
}

Point scale(const ExactScalar& lambda, const Point& p) {
  std::vector<ExactScalar> c(p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i) c[i] = lambda * p[i];
  return Point(std::move(c));
}

Point make_point(std::initializer_list<long> coords) {
  std::vector<ExactScalar> c;
  c.reserve(coords.size());
  for (long v : coords) c.emplace_back(v);
  return Point(std::move(c));
}

}  // namespace dotconf
