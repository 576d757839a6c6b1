#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace trochoid {

__extension__ using WideInt = __int128;

// Exact fraction over int64 kept in lowest terms with a positive denominator.
// Intermediate products use 128-bit integers; a result that does not fit
// back into int64 throws std::overflow_error instead of wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT(implicit)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  double to_double() const;

  // "p" or "p/q"; inverse of parse() for the fraction grammar.
  std::string to_string() const;

  // Accepts "p", "p/q", and decimals such as "-0.125" or "1.5e-3".
  // Decimals convert exactly (0.1 becomes 1/10). Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  // Integers or "p/q" only; decimals are rejected.
  static Rational parse_fraction(std::string_view text);

  // Exact value of the shortest decimal that round-trips to `value`.
  static Rational from_double(double value);

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) = default;
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

 private:
  static Rational from_wide(WideInt num, WideInt den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

Rational abs(const Rational& value);

// Greatest common divisor of two non-negative rationals: the largest g with
// lhs/g and rhs/g both integers. gcd(x, 0) = x.
Rational gcd(const Rational& lhs, const Rational& rhs);

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace trochoid
