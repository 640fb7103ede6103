#include "dotconf/scalar.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace dotconf {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  return BigInt(std::string(s), 10);
}

}  // namespace

ExactScalar::ExactScalar(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  value_.get_num() = numerator;
  value_.get_den() = denominator;
  value_.canonicalize();
}

ExactScalar::ExactScalar(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

ExactScalar ExactScalar::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                               : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  BigInt n = parse_integer(num);
  if (negative) n = -n;
  return ExactScalar(n, parse_integer(den));
}

std::string ExactScalar::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::size_t hash_bigint(const BigInt& value) {
  const mpz_srcptr z = value.get_mpz_t();
  std::size_t h = static_cast<std::size_t>(mpz_sgn(z)) + 0x9e3779b97f4a7c15ULL;
  const std::size_t limbs = mpz_size(z);
  for (std::size_t i = 0; i < limbs; ++i) {
    h ^= static_cast<std::size_t>(mpz_getlimbn(z, i)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::size_t ExactScalar::hash() const {
  const std::size_t a = hash_bigint(value_.get_num());
  const std::size_t b = hash_bigint(value_.get_den());
  return a ^ (b * 0x100000001b3ULL + (a << 7));
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& other) {
  value_ += other.value_;
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& other) {
  value_ -= other.value_;
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& other) {
  value_ *= other.value_;
  return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& other) {
  if (other.is_zero()) throw std::domain_error("division by zero");
  value_ /= other.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& s) { return os << s.str(); }

bool at_least_scaled_power(const BigInt& y, const ExactScalar& a, const BigInt& x,
                           const ExactScalar& exponent) {
  if (a.sign() < 0 || exponent.sign() < 0 || y < 0 || x < 0) {
    throw std::invalid_argument("at_least_scaled_power expects non-negative inputs");
  }
  const unsigned long p = exponent.numerator().get_ui();
  const unsigned long q = exponent.denominator().get_ui();
  // y >= (an/ad) * x^(p/q)  <=>  (y*ad)^q >= an^q * x^p
  BigInt lhs, rhs, xp;
  BigInt yad = y * a.denominator();
  mpz_pow_ui(lhs.get_mpz_t(), yad.get_mpz_t(), q);
  mpz_pow_ui(rhs.get_mpz_t(), a.numerator().get_mpz_t(), q);
  mpz_pow_ui(xp.get_mpz_t(), x.get_mpz_t(), p);
  rhs *= xp;
  return lhs >= rhs;
}

}  // namespace dotconf
