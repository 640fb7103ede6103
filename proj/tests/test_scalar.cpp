#include <doctest.h>

#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "dotconf/scalar.hpp"

using dotconf::at_least_scaled_power;
using dotconf::BigInt;
using dotconf::ExactScalar;

TEST_CASE("parse reduces fractions and normalizes the sign") {
  CHECK(ExactScalar::parse("3/4").str() == "3/4");
  CHECK(ExactScalar::parse("-6/8").str() == "-3/4");
  CHECK(ExactScalar::parse("+10/5").str() == "2");
  CHECK(ExactScalar::parse("0/7").is_zero());
  CHECK(ExactScalar::parse("-12").str() == "-12");
  CHECK(ExactScalar::parse("123456789012345678901234567890").str() == "123456789012345678901234567890");
}

TEST_CASE("parse rejects malformed text and zero denominators") {
  for (const char* bad : {"", "abc", "1/0", "1.5", "1/", "/2", "3 4", "--1", "1e3", "6/-8"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(ExactScalar::parse(bad), std::invalid_argument);
  }
}

TEST_CASE("equal values have equal hashes regardless of construction") {
  const ExactScalar a(BigInt(2), BigInt(4));
  const ExactScalar b = ExactScalar::parse("1/2");
  const ExactScalar c = ExactScalar(1) / ExactScalar(2);
  CHECK(a == b);
  CHECK(b == c);
  CHECK(a.hash() == b.hash());
  CHECK(b.hash() == c.hash());
  std::unordered_set<ExactScalar> s{a, b, c, ExactScalar(-1, 2)};  // NOLINT
  CHECK(s.size() == 2);
}

TEST_CASE("denominator is always positive and in lowest terms") {
  const ExactScalar x(BigInt(9), BigInt(-12));
  CHECK(x.numerator() == -3);
  CHECK(x.denominator() == 4);
  CHECK_FALSE(x.is_integer());
  CHECK((x * ExactScalar(4)).is_integer());
}

TEST_CASE("arithmetic is exact") {
  const ExactScalar third = ExactScalar::parse("1/3");
  CHECK(third + third + third == ExactScalar(1));
  CHECK(ExactScalar::parse("3/4") * ExactScalar(4) + ExactScalar::parse("5/16") * ExactScalar::parse("8/5") ==
        ExactScalar::parse("7/2"));
  CHECK(-third == ExactScalar::parse("-1/3"));
  CHECK(third - ExactScalar(1) == ExactScalar::parse("-2/3"));
}

TEST_CASE("division by zero throws") {
  CHECK_THROWS(ExactScalar(1) / ExactScalar(0));
  CHECK_THROWS(ExactScalar(BigInt(1), BigInt(0)));
}

TEST_CASE("ordering follows rational value") {
  CHECK(ExactScalar::parse("1/3") < ExactScalar::parse("1/2"));
  CHECK(ExactScalar::parse("-1/2") < ExactScalar::parse("-1/3"));
  CHECK(ExactScalar::parse("2/4") <= ExactScalar::parse("1/2"));
  CHECK(ExactScalar(3).sign() == 1);
  CHECK(ExactScalar(-3).sign() == -1);
  CHECK(ExactScalar(0).sign() == 0);
}

TEST_CASE("at_least_scaled_power compares without rounding") {
  // 3 >= 27^(1/3)
  CHECK(at_least_scaled_power(BigInt(3), ExactScalar(1), BigInt(27), ExactScalar(1, 3)));
  CHECK_FALSE(at_least_scaled_power(BigInt(2), ExactScalar(1), BigInt(27), ExactScalar(1, 3)));
  // (1/4) * 64^(2/3) = 4
  CHECK(at_least_scaled_power(BigInt(4), ExactScalar(1, 4), BigInt(64), ExactScalar(2, 3)));
  CHECK_FALSE(at_least_scaled_power(BigInt(3), ExactScalar(1, 4), BigInt(64), ExactScalar(2, 3)));
  // 100^(4/3) / 8 = 58.48..., so 59 passes and 58 fails
  CHECK(at_least_scaled_power(BigInt(59), ExactScalar(1, 8), BigInt(100), ExactScalar(4, 3)));
  CHECK_FALSE(at_least_scaled_power(BigInt(58), ExactScalar(1, 8), BigInt(100), ExactScalar(4, 3)));
  // integer exponent
  CHECK(at_least_scaled_power(BigInt(16), ExactScalar(1), BigInt(4), ExactScalar(2)));
  CHECK_FALSE(at_least_scaled_power(BigInt(15), ExactScalar(1), BigInt(4), ExactScalar(2)));
}

TEST_CASE("stream output matches str") {
  std::ostringstream os;
  os << ExactScalar(BigInt(10), BigInt(-4));
  CHECK(os.str() == "-5/2");
}
