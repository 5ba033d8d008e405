#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace stokes {

using Integer = boost::multiprecision::cpp_int;

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Exact fraction num/den, always stored with den >= 1 and gcd(|num|, den) = 1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(Integer value) : num_(std::move(value)), den_(1) {}
  /// Reduces the fraction. Throws InvalidInput when `den` is zero.
  Rational(Integer num, Integer den);

  const Integer& num() const noexcept { return num_; }
  const Integer& den() const noexcept { return den_; }

  bool is_integer() const noexcept { return den_ == 1; }
  int sign() const noexcept { return num_.sign(); }

  /// "p" for integers, "p/q" otherwise.
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws InvalidInput on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  Integer num_;
  Integer den_;
};

/// Parses "p" or "p/q" (optional leading '-'). With `canonical` set, rejects
/// fractions that are not already in lowest terms or have q = 1.
/// Throws ParseError with offsets relative to `offset`.
Rational parse_rational(std::string_view text, bool canonical = true, std::size_t offset = 0);

/// Gaussian rational re + im*i. Used for locations and coefficients.
struct Complex {
  Rational re;
  Rational im;

  bool is_zero() const noexcept { return re.sign() == 0 && im.sign() == 0; }
  std::string str() const;

  Complex operator-() const { return {-re, -im}; }
  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend bool operator==(const Complex&, const Complex&) = default;
};

/// Parses "a", "bi", "a+bi", "a-bi", "i", "-i", optionally wrapped in
/// parentheses. Components follow parse_rational(canonical = true).
Complex parse_complex(std::string_view text, std::size_t offset = 0);

}  // namespace stokes
