#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace singlab {

using Integer = boost::multiprecision::cpp_int;

// Exact rational number. Always in lowest terms, denominator > 0, zero is 0/1.
// All invariant computations in the library run on this type; floating point
// never enters any comparison against a threshold.
class Rational {
 public:
  Rational() = default;  // zero
  Rational(long long value);
  Rational(const Integer& value);
  Rational(const Integer& numerator, const Integer& denominator);

  // Accepts "p" or "p/q" with an optional leading sign.
  static Rational parse(std::string_view text);

  Integer numerator() const;
  Integer denominator() const;

  bool is_zero() const;
  bool is_one() const;
  bool is_integer() const;
  int sign() const;

  // Exact floor, correct for negative values: floor(-7/2) = -4.
  Integer floor() const;

  Rational abs() const;
  Rational reciprocal() const;
  Rational pow(long long exponent) const;

  Rational operator-() const;
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);  // throws DomainError on zero

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // "p" when integral, "p/q" otherwise.
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Rational& value);

 private:
  using Backend = boost::multiprecision::cpp_rational;
  explicit Rational(Backend value) : value_(std::move(value)) {}

  Backend value_;
};

}  // namespace singlab
