#include "stokes/rational.hpp"

#include "stokes/error.hpp"

#include <cctype>

namespace stokes {

Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::lcm(a, b);
}

Rational::Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw InvalidInput("rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Integer g = gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

std::string Rational::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  *this = Rational(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  *this = Rational(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  *this = Rational(num_ * rhs.num_, den_ * rhs.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw InvalidInput("division by zero");
  *this = Rational(num_ * rhs.den_, den_ * rhs.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  Integer lhs = a.num_ * b.den_;
  Integer rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

namespace {

Integer parse_digits(std::string_view text, std::size_t& i, std::size_t offset) {
  std::size_t start = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == start) throw ParseError(offset + i, "expected digits");
  return Integer(std::string(text.substr(start, i - start)));
}

}  // namespace

Rational parse_rational(std::string_view text, bool canonical, std::size_t offset) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  Integer num = parse_digits(text, i, offset);
  if (negative) num = -num;
  if (i == text.size()) return Rational(std::move(num));

  if (text[i] != '/') throw ParseError(offset + i, "unexpected character '" + std::string(1, text[i]) + "'");
  std::size_t den_pos = ++i;
  Integer den = parse_digits(text, i, offset);
  if (i != text.size()) throw ParseError(offset + i, "trailing characters after fraction");
  if (den == 0) throw ParseError(offset + den_pos, "zero denominator");
  if (canonical) {
    if (den == 1) throw ParseError(offset + den_pos, "denominator 1 must be written as an integer");
    if (gcd(num, den) != 1) throw ParseError(offset, "fraction is not in lowest terms");
  }
  return Rational(std::move(num), std::move(den));
}

std::string Complex::str() const {
  if (im.sign() == 0) return re.str();
  std::string imag;
  if (im == Rational(1)) {
    imag = "i";
  } else if (im == Rational(-1)) {
    imag = "-i";
  } else {
    imag = im.str() + "i";
  }
  if (re.sign() == 0) return imag;
  if (im.sign() > 0) return re.str() + "+" + imag;
  return re.str() + imag;
}

Complex parse_complex(std::string_view text, std::size_t offset) {
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
    text = text.substr(1, text.size() - 2);
    ++offset;
  }
  if (text.empty()) throw ParseError(offset, "empty number");
  if (text.back() != 'i') return {parse_rational(text, true, offset), Rational(0)};

  // Split at the last sign that is not the leading one.
  std::size_t split = 0;
  for (std::size_t i = text.size() - 1; i > 0; --i) {
    if (text[i] == '+' || text[i] == '-') {
      split = i;
      break;
    }
  }
  std::string_view real_text = text.substr(0, split);
  std::string_view imag_text = text.substr(split, text.size() - 1 - split);

  Complex z;
  if (!real_text.empty()) z.re = parse_rational(real_text, true, offset);
  if (imag_text.empty() || imag_text == "+") {
    z.im = Rational(1);
  } else if (imag_text == "-") {
    z.im = Rational(-1);
  } else {
    z.im = parse_rational(imag_text, true, offset + split);
  }
  return z;
}

}  // namespace stokes
