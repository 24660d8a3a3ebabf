#include <doctest.h>

#include "singlab/errors.hpp"
#include "singlab/rational.hpp"

#include "test_util.hpp"

using namespace singlab;

TEST_CASE("rational canonical form") {
  Rational r(Integer(6), Integer(-4));
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);

  CHECK(Rational(Integer(0), Integer(7)) == Rational(0));
  CHECK(Rational(0).denominator() == 1);
  CHECK(Rational(Integer(30), Integer(45)) == Rational(Integer(2), Integer(3)));
  CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), DomainError);
}

TEST_CASE("rational arithmetic is exact") {
  Rational a(Integer(1), Integer(3));
  Rational b(Integer(1), Integer(5));
  CHECK(a + Rational(3) * b == Rational(Integer(14), Integer(15)));
  CHECK(a - a == Rational(0));
  CHECK(a / b == Rational(Integer(5), Integer(3)));
  CHECK_THROWS_AS(a / Rational(0), DomainError);
  CHECK((a < b) == false);
  CHECK(Rational(-1) < Rational(0));
}

TEST_CASE("exact floor with sign correction") {
  CHECK(Rational(Integer(7), Integer(2)).floor() == 3);
  CHECK(Rational(Integer(-7), Integer(2)).floor() == -4);
  CHECK(Rational(Integer(4), Integer(2)).floor() == 2);
  CHECK(Rational(Integer(-4), Integer(2)).floor() == -2);
  CHECK(Rational(0).floor() == 0);
  CHECK(Rational(Integer(14), Integer(15)).floor() == 0);
}

TEST_CASE("rational text round trip") {
  CHECK(Rational::parse("8/15").str() == "8/15");
  CHECK(Rational::parse("-3/6").str() == "-1/2");
  CHECK(Rational::parse("7").str() == "7");
  CHECK(Rational::parse("+2/4") == Rational(Integer(1), Integer(2)));
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("x"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/ 2"), ParseError);
}

TEST_CASE("rational pow and reciprocal") {
  Rational half(Integer(1), Integer(2));
  CHECK(half.pow(3) == Rational(Integer(1), Integer(8)));
  CHECK(half.pow(-2) == Rational(4));
  CHECK(half.pow(0) == Rational(1));
  CHECK(Rational(Integer(-2), Integer(3)).reciprocal() ==
        Rational(Integer(-3), Integer(2)));
  CHECK_THROWS_AS(Rational(0).reciprocal(), DomainError);
}

TEST_CASE("random rationals stay in lowest terms") {
  testutil::Gen gen(11);
  for (int i = 0; i < 500; ++i) {
    Rational a = gen.rational(40);
    Rational b = gen.rational(40);
    Rational c = a * b + a - b;
    CHECK(c.denominator() > 0);
    CHECK(boost::multiprecision::gcd(
              c.numerator() < 0 ? Integer(-c.numerator()) : c.numerator(),
              c.denominator()) == 1);
  }
}
