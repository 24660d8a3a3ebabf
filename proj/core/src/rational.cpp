#include "singlab/rational.hpp"

#include <cctype>
#include <ostream>
#include <utility>

#include "singlab/errors.hpp"

namespace singlab {

Rational::Rational(long long value) : value_(value) {}

Rational::Rational(const Integer& value) : value_(value) {}

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) {
    throw DomainError("rational with zero denominator");
  }
  // The backend reduces to lowest terms but insists on a positive
  // denominator up front.
  if (denominator < 0) {
    value_ = Backend(-numerator, -denominator);
  } else {
    value_ = Backend(numerator, denominator);
  }
}

Rational Rational::parse(std::string_view text) {
  auto is_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
  };

  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }
  std::string_view num_part = rest;
  std::string_view den_part;
  if (auto slash = rest.find('/'); slash != std::string_view::npos) {
    num_part = rest.substr(0, slash);
    den_part = rest.substr(slash + 1);
    if (!is_digits(den_part)) {
      throw ParseError("malformed rational '" + std::string(text) + "'", 0);
    }
  }
  if (!is_digits(num_part)) {
    throw ParseError("malformed rational '" + std::string(text) + "'", 0);
  }
  Integer num{std::string(num_part)};
  Integer den = den_part.empty() ? Integer(1) : Integer{std::string(den_part)};
  if (negative) num = -num;
  return Rational(num, den);
}

Integer Rational::numerator() const {
  return boost::multiprecision::numerator(value_);
}

Integer Rational::denominator() const {
  return boost::multiprecision::denominator(value_);
}

bool Rational::is_zero() const { return value_.is_zero(); }

bool Rational::is_one() const { return value_ == 1; }

bool Rational::is_integer() const { return denominator() == 1; }

int Rational::sign() const { return value_.sign(); }

Integer Rational::floor() const {
  Integer num = numerator();
  Integer den = denominator();
  Integer quotient = num / den;  // truncates toward zero
  if (num < 0 && num % den != 0) --quotient;
  return quotient;
}

Rational Rational::abs() const {
  return sign() < 0 ? -*this : *this;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw DomainError("reciprocal of zero");
  return Rational(denominator(), numerator());
}

Rational Rational::pow(long long exponent) const {
  if (exponent < 0) return reciprocal().pow(-exponent);
  Rational base = *this;
  Rational result(1);
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

Rational Rational::operator-() const { return Rational(Backend(-value_)); }

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw DomainError("division by zero");
  value_ /= other.value_;
  return *this;
}

bool operator==(const Rational& a, const Rational& b) {
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (a.value_ > b.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  std::string out = numerator().str();
  if (!is_integer()) {
    out += '/';
    out += denominator().str();
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.str();
}

}  // namespace singlab
