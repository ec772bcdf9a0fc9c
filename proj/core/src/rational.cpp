#include "lpc/rational.hpp"

#include <cstdlib>

namespace lpc {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN)
    fail(errc::overflow_error, "rational arithmetic exceeds 64-bit range");
  return static_cast<std::int64_t>(v);
}

}  // namespace

Rational Rational::make(__int128 n, __int128 d) {
  if (d == 0) fail(errc::overflow_error, "zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  Rational r;
  r.num_ = narrow(n);
  r.den_ = narrow(d);
  return r;
}

Rational::Rational(std::int64_t n, std::int64_t d) {
  *this = make(static_cast<__int128>(n), static_cast<__int128>(d));
}

Rational Rational::operator-() const {
  return make(-static_cast<__int128>(num_), den_);
}

Rational Rational::operator+(const Rational& o) const {
  return make(static_cast<__int128>(num_) * o.den_ +
                  static_cast<__int128>(o.num_) * den_,
              static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
  return make(static_cast<__int128>(num_) * o.den_ -
                  static_cast<__int128>(o.num_) * den_,
              static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
  return make(static_cast<__int128>(num_) * o.num_,
              static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) fail(errc::overflow_error, "division by zero");
  return make(static_cast<__int128>(num_) * o.den_,
              static_cast<__int128>(den_) * o.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  __int128 lhs = static_cast<__int128>(num_) * o.den_;
  __int128 rhs = static_cast<__int128>(o.num_) * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  std::string s = std::to_string(num_);
  if (den_ != 1) {
    s += '/';
    s += std::to_string(den_);
  }
  return s;
}

Rational Rational::parse(std::string_view text) {
  auto bad = [&]() -> Rational {
    fail(errc::syntax_error,
         "invalid rational '" + std::string(text) + "' (expect p or p/q)");
  };
  size_t i = 0;
  bool neg = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    neg = text[i] == '-';
    ++i;
  }
  auto read_int = [&](std::int64_t& out) -> bool {
    if (i >= text.size() || text[i] < '0' || text[i] > '9') return false;
    __int128 v = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      v = v * 10 + (text[i] - '0');
      if (v > INT64_MAX)
        fail(errc::overflow_error, "integer literal out of range");
      ++i;
    }
    out = static_cast<std::int64_t>(v);
    return true;
  };
  std::int64_t num = 0, den = 1;
  if (!read_int(num)) return bad();
  if (i < text.size() && text[i] == '/') {
    ++i;
    if (!read_int(den)) return bad();
    if (den == 0) fail(errc::syntax_error, "zero denominator");
  }
  if (i != text.size()) return bad();
  return Rational(neg ? -num : num, den);
}

}  // namespace lpc
