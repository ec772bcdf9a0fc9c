#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "lpc/error.hpp"

namespace lpc {

// Exact rational scalar on checked 64-bit integers.  Always normalized:
// denominator > 0, gcd(num, den) == 1.  Arithmetic runs through 128-bit
// intermediates and raises OverflowError instead of wrapping.  There are no
// floating-point conversions anywhere; comparisons are exact.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}
  Rational(std::int64_t n, std::int64_t d);

  // Accepts "p" or "p/q" with an optional leading '-'.
  static Rational parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  // Renders "p/q", or just "p" when the denominator is 1.
  std::string str() const;

  Rational operator-() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  std::strong_ordering operator<=>(const Rational& o) const;

 private:
  static Rational make(__int128 n, __int128 d);

  std::int64_t num_;
  std::int64_t den_;
};

inline Rational operator+(std::int64_t a, const Rational& b) { return Rational(a) + b; }
inline Rational operator-(std::int64_t a, const Rational& b) { return Rational(a) - b; }
inline Rational operator*(std::int64_t a, const Rational& b) { return Rational(a) * b; }

}  // namespace lpc
