#include "trochoid/rational.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace trochoid {

namespace {

using Wide = WideInt;

Wide wide_abs(Wide v) { return v < 0 ? -v : v; }

Wide wide_gcd(Wide a, Wide b) {
  a = wide_abs(a);
  b = wide_abs(b);
  while (b != 0) {
    Wide r = a % b;
    a = b;
    b = r;
  }
  return a;
}

bool fits(Wide v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t parse_integer(std::string_view text, std::string_view whole) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  std::int64_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    throw std::invalid_argument("not a rational number: '" + std::string(whole) + "'");
  }
  return value;
}

Wide pow10(int exponent) {
  Wide r = 1;
  for (int i = 0; i < exponent; ++i) {
    r *= 10;
    if (!fits(r)) throw std::overflow_error("decimal exponent out of range");
  }
  return r;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  *this = from_wide(num, den);
}

Rational Rational::from_wide(Wide num, Wide den) {
  if (den == 0) throw std::domain_error("division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (!fits(num) || !fits(den)) throw std::overflow_error("rational overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

double Rational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse_fraction(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  auto num = parse_integer(text.substr(0, slash), text);
  auto den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

Rational Rational::parse(std::string_view text) {
  if (text.find('/') != std::string_view::npos) return parse_fraction(text);
  auto dot = text.find('.');
  auto exp_pos = text.find_first_of("eE");
  if (dot == std::string_view::npos && exp_pos == std::string_view::npos) {
    return Rational(parse_integer(text, text));
  }

  std::string_view mantissa = text.substr(0, exp_pos);
  int exponent = 0;
  if (exp_pos != std::string_view::npos) {
    exponent = static_cast<int>(parse_integer(text.substr(exp_pos + 1), text));
  }
  std::string digits;
  bool negative = false;
  int fraction_digits = 0;
  bool seen_dot = false;
  for (std::size_t i = 0; i < mantissa.size(); ++i) {
    char c = mantissa[i];
    if (i == 0 && (c == '-' || c == '+')) {
      negative = c == '-';
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      if (seen_dot) ++fraction_digits;
    } else {
      throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
    }
  }
  if (digits.empty()) {
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  }
  auto first_nonzero = digits.find_first_not_of('0');
  digits = first_nonzero == std::string::npos ? "0" : digits.substr(first_nonzero);
  if (digits.size() > 18) throw std::overflow_error("decimal has too many digits: '" + std::string(text) + "'");

  Wide num = parse_integer(digits, text);
  if (negative) num = -num;
  int scale = exponent - fraction_digits;
  if (scale >= 0) return from_wide(num * pow10(scale), 1);
  return from_wide(num, pow10(-scale));
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite value has no rational form");
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  (void)ec;
  return parse(std::string_view(buf, static_cast<std::size_t>(ptr - buf)));
}

Rational Rational::operator-() const { return from_wide(-static_cast<Wide>(num_), den_); }

Rational& Rational::operator+=(const Rational& rhs) {
  return *this = from_wide(static_cast<Wide>(num_) * rhs.den_ + static_cast<Wide>(rhs.num_) * den_,
                           static_cast<Wide>(den_) * rhs.den_);
}

Rational& Rational::operator-=(const Rational& rhs) {
  return *this = from_wide(static_cast<Wide>(num_) * rhs.den_ - static_cast<Wide>(rhs.num_) * den_,
                           static_cast<Wide>(den_) * rhs.den_);
}

Rational& Rational::operator*=(const Rational& rhs) {
  return *this = from_wide(static_cast<Wide>(num_) * rhs.num_, static_cast<Wide>(den_) * rhs.den_);
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw std::domain_error("division by zero");
  return *this = from_wide(static_cast<Wide>(num_) * rhs.den_, static_cast<Wide>(den_) * rhs.num_);
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  Wide l = static_cast<Wide>(lhs.num_) * rhs.den_;
  Wide r = static_cast<Wide>(rhs.num_) * lhs.den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational abs(const Rational& value) { return value.sign() < 0 ? -value : value; }

Rational gcd(const Rational& lhs, const Rational& rhs) {
  if (lhs.sign() < 0 || rhs.sign() < 0) throw std::domain_error("gcd of negative rational");
  // gcd(p/q, r/s) = gcd(p*s, r*q) / (q*s)
  Wide num = wide_gcd(static_cast<Wide>(lhs.num()) * rhs.den(), static_cast<Wide>(rhs.num()) * lhs.den());
  Wide den = static_cast<Wide>(lhs.den()) * rhs.den();
  if (num == 0) return Rational(0);
  Wide g = wide_gcd(num, den);
  num /= g;
  den /= g;
  if (!fits(num) || !fits(den)) throw std::overflow_error("rational overflow");
  return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

}  // namespace trochoid
