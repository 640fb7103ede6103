#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dotconf {

using BigInt = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Equal values have equal hashes.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(long value) : value_(value) {}  // NOLINT: integers convert implicitly
  ExactScalar(int value) : value_(static_cast<long>(value)) {}  // NOLINT
  explicit ExactScalar(const BigInt& integer) : value_(integer) {}
  ExactScalar(const BigInt& numerator, const BigInt& denominator);
  explicit ExactScalar(mpq_class value);

  /// Accepts an optionally signed integer or an `a/b` fraction. Fractions
  /// need not be reduced. Throws std::invalid_argument on malformed text or
  /// a zero denominator.
  static ExactScalar parse(std::string_view text);

  const BigInt& numerator() const { return value_.get_num(); }
  const BigInt& denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Reduced form: "n" for integers, "n/d" otherwise.
  std::string str() const;
  double to_double() const { return value_.get_d(); }
  std::size_t hash() const;

  ExactScalar operator-() const { return ExactScalar(mpq_class(-value_)); }
  ExactScalar& operator+=(const ExactScalar& other);
  ExactScalar& operator-=(const ExactScalar& other);
  ExactScalar& operator*=(const ExactScalar& other);
  ExactScalar& operator/=(const ExactScalar& other);

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExactScalar& a, const ExactScalar& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const ExactScalar& s);

/// Hash of an arbitrary-precision integer over its limbs and sign.
std::size_t hash_bigint(const BigInt& value);

/// Exact comparison of a * x^(p/q) against y for non-negative integers,
/// i.e. y^q >= a^q * x^p. Used for bound checks without floating point.
bool at_least_scaled_power(const BigInt& y, const ExactScalar& a, const BigInt& x,
                           const ExactScalar& exponent);

}  // namespace dotconf

template <>
struct std::hash<dotconf::ExactScalar> {
  std::size_t operator()(const dotconf::ExactScalar& s) const noexcept { return s.hash(); }
};
