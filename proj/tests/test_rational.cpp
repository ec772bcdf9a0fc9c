#include <cstdint>
#include <random>
#include <sstream>

#include "doctest.h"
#include "lpc/rational.hpp"

using lpc::Error;
using lpc::errc;
using lpc::Rational;

TEST_CASE("construction normalizes to lowest terms with positive denominator") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(-6, 4) == Rational(-3, 2));
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(-6, -4) == Rational(3, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0, -7).str() == "0");
  CHECK(Rational(5).num() == 5);
  CHECK(Rational(5).den() == 1);
  CHECK(Rational(7, 7) == Rational(1));
}

TEST_CASE("zero denominator is rejected") {
  CHECK_THROWS_AS(Rational(1, 0), Error);
  try {
    Rational r(1, 0);
    (void)r;
  } catch (const Error& e) {
    CHECK(e.code() == errc::overflow_error);
  }
}

TEST_CASE("arithmetic") {
  Rational a(1, 2), b(1, 3);
  CHECK(a + b == Rational(5, 6));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 6));
  CHECK(a / b == Rational(3, 2));
  CHECK(-a == Rational(-1, 2));
  CHECK(a + Rational(-1, 2) == Rational(0));
  CHECK_THROWS_AS(a / Rational(0), Error);
  CHECK(2 * a == Rational(1));
  CHECK(a + 1 == Rational(3, 2));
  CHECK(1 - a == Rational(1, 2));
}

TEST_CASE("ordering is the numeric order") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(2, 4) <= Rational(1, 2));
  CHECK(Rational(7, 2) > Rational(3));
  CHECK(Rational(-5) < Rational(0));
  // Cross-multiplication must not overflow for large entries.
  Rational big(3037000499LL, 2);
  Rational big2(3037000499LL, 3);
  CHECK(big2 < big);
}

TEST_CASE("parse accepts integers and fractions") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-3/4") == Rational(-3, 4));
  CHECK(Rational::parse("12") == Rational(12));
  CHECK(Rational::parse("-12") == Rational(-12));
  CHECK(Rational::parse("0") == Rational(0));
  CHECK(Rational::parse("6/4") == Rational(3, 2));
}

TEST_CASE("parse rejects malformed input") {
  for (const char* bad : {"", "/", "1/", "/2", "a", "1/2/3", "1.5", "1 /2", "+ 1", "--2", "3/-4"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Rational::parse(bad), Error);
  }
  try {
    Rational::parse("1/0");
  } catch (const Error& e) {
    CHECK(e.code() == errc::syntax_error);
  }
}

TEST_CASE("overflow past 64 bits is detected, not wrapped") {
  CHECK_THROWS_AS(Rational::parse("99999999999999999999"), Error);
  try {
    Rational::parse("99999999999999999999");
  } catch (const Error& e) {
    CHECK(e.code() == errc::overflow_error);
  }
  Rational huge(INT64_MAX, 1);
  CHECK_THROWS_AS(huge + huge, Error);
  CHECK_THROWS_AS(huge * Rational(2), Error);
  // Intermediate products above 64 bits must still reduce when the result fits.
  Rational x(1, 6074000998LL);
  Rational y(6074000998LL, 2);
  CHECK(x * y == Rational(1, 2));
}

TEST_CASE("str round trips through parse") {
  CHECK(Rational(3, 4).str() == "3/4");
  CHECK(Rational(-3, 4).str() == "-3/4");
  CHECK(Rational(5).str() == "5");
  std::mt19937_64 rng(12345);
  for (int t = 0; t < 500; ++t) {
    std::int64_t num = static_cast<std::int64_t>(rng() % 20001) - 10000;
    std::int64_t den = static_cast<std::int64_t>(rng() % 999) + 1;
    Rational r(num, den);
    CHECK(Rational::parse(r.str()) == r);
  }
}

TEST_CASE("field laws on random values") {
  std::mt19937_64 rng(99);
  auto draw = [&] {
    return Rational(static_cast<std::int64_t>(rng() % 41) - 20,
                    static_cast<std::int64_t>(rng() % 12) + 1);
  };
  for (int t = 0; t < 300; ++t) {
    Rational a = draw(), b = draw(), c = draw();
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rational(0));
    if (!(b == Rational(0))) CHECK((a / b) * b == a);
  }
}
