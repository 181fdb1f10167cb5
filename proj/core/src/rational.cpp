#include "quiverlab/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace qlab {
namespace {

__extension__ using wide_int = __int128;

wide_int gcd128(wide_int a, wide_int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    wide_int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr wide_int kMax = std::numeric_limits<std::int64_t>::max();
constexpr wide_int kMin = std::numeric_limits<std::int64_t>::min();

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  auto first = text.data();
  auto last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  *this = from_wide(num, den);
}

Rational Rational::from_wide(wide num, wide den) {
  if (den == 0) throw std::domain_error("division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  wide_int g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num > kMax || num < kMin || den > kMax) {
    throw std::overflow_error("rational arithmetic overflow");
  }
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational Rational::operator-() const { return from_wide(-static_cast<wide_int>(num_), den_); }

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == 1 && rhs.den_ == 1) {
    *this = from_wide(static_cast<wide_int>(num_) + rhs.num_, 1);
  } else {
    *this = from_wide(static_cast<wide_int>(num_) * rhs.den_ +
                          static_cast<wide_int>(rhs.num_) * den_,
                      static_cast<wide_int>(den_) * rhs.den_);
  }
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  *this = from_wide(static_cast<wide_int>(num_) * rhs.num_,
                    static_cast<wide_int>(den_) * rhs.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw std::domain_error("division by zero");
  *this = from_wide(static_cast<wide_int>(num_) * rhs.den_,
                    static_cast<wide_int>(den_) * rhs.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  wide_int l = static_cast<wide_int>(lhs.num_) * rhs.den_;
  wide_int r = static_cast<wide_int>(rhs.num_) * lhs.den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational Rational::inverse() const { return Rational(1) / *this; }

Rational Rational::pow(int exponent) const {
  Rational base = exponent < 0 ? inverse() : *this;
  int e = exponent < 0 ? -exponent : exponent;
  Rational result(1);
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  auto den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.to_string();
}

}  // namespace qlab
