#include "dotconf/frame.hpp"

#include "dotconf/simd/kernels.hpp"

namespace dotconf {

std::vector<std::int64_t> IntegerFrame::point(std::size_t i) const {
  std::vector<std::int64_t> p(dim);
  for (std::size_t c = 0; c < dim; ++c) p[c] = at(c, i);
  return p;
}

std::optional<IntegerFrame> make_integer_frame(const PointSet& points) {
  IntegerFrame frame;
  frame.dim = points.dim();
  frame.size = points.size();
  for (const auto& p : points) {
    for (const auto& c : p.coords()) {
      mpz_lcm(frame.scale.get_mpz_t(), frame.scale.get_mpz_t(), c.denominator().get_mpz_t());
    }
  }
  frame.coords.resize(frame.dim * frame.size);
  const BigInt limit = simd::kLaneLimit;
  for (std::size_t i = 0; i < frame.size; ++i) {
    for (std::size_t c = 0; c < frame.dim; ++c) {
      const ExactScalar& v = points[i][c];
      const BigInt scaled = v.numerator() * (frame.scale / v.denominator());
      if (abs(scaled) > limit) return std::nullopt;
      const std::int64_t s = scaled.get_si();
      frame.coords[c * frame.size + i] = s;
      frame.max_abs = std::max(frame.max_abs, s < 0 ? -s : s);
    }
  }
  return frame;
}

bool fits_product(const IntegerFrame& a, const IntegerFrame& b) {
  if (a.dim != b.dim) return false;
  const __int128 bound = static_cast<__int128>(a.max_abs) * b.max_abs * static_cast<__int128>(a.dim);
  return bound < (static_cast<__int128>(1) << 62);
}

ExactScalar frame_value(std::int64_t raw, const IntegerFrame& a, const IntegerFrame& b) {
  return ExactScalar(BigInt(static_cast<long>(raw)), a.scale * b.scale);
}

std::optional<std::int64_t> frame_target(const ExactScalar& value, const IntegerFrame& a,
                                         const IntegerFrame& b) {
  const mpq_class scaled = value.raw() * mpq_class(BigInt(a.scale * b.scale));
  if (scaled.get_den() != 1) return std::nullopt;
  const BigInt& n = scaled.get_num();
  if (!n.fits_slong_p()) return std::nullopt;
  return static_cast<std::int64_t>(n.get_si());
}

std::optional<std::vector<std::int64_t>> rescale_into(const Point& p, const BigInt& scale) {
  std::vector<std::int64_t> out(p.dim());
  const BigInt limit = simd::kLaneLimit;
  for (std::size_t c = 0; c < p.dim(); ++c) {
    const mpq_class v = p[c].raw() * mpq_class(scale);
    if (v.get_den() != 1 || abs(v.get_num()) > limit) return std::nullopt;
    out[c] = v.get_num().get_si();
  }
  return out;
}

}  // namespace dotconf
