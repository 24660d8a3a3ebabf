#include <doctest.h>

#include "singlab/errors.hpp"
#include "singlab/polynomial.hpp"

#include "naive_arith.hpp"
#include "test_util.hpp"

using namespace singlab;
using testutil::p;
using testutil::ring;

TEST_CASE("partial derivatives") {
  auto r = ring({"x", "y"});
  Polynomial f = p("x^2*y^2 + x^5 + y^5", r);
  auto partials = partial_derivatives(f);
  CHECK(partials[0] == p("2*x*y^2 + 5*x^4", r));
  CHECK(partials[1] == p("2*x^2*y + 5*y^4", r));

  Polynomial constant = Polynomial::constant(r, Rational(7));
  for (const Polynomial& d : partial_derivatives(constant)) CHECK(d.is_zero());

  auto r3 = ring({"x1", "x2", "x3"});
  Polynomial quadric = p("x1^2 + x2^2 + x3^2", r3);
  auto qd = partial_derivatives(quadric);
  CHECK(qd[0] == p("2*x1", r3));
  CHECK(qd[1] == p("2*x2", r3));
  CHECK(qd[2] == p("2*x3", r3));
}

TEST_CASE("mixed partials commute") {
  testutil::Gen gen(23);
  auto r = ring({"x", "y", "z"});
  for (int i = 0; i < 300; ++i) {
    Polynomial f = gen.polynomial(r);
    for (std::size_t a = 0; a < 3; ++a) {
      for (std::size_t b = a + 1; b < 3; ++b) {
        CHECK(f.derivative(a).derivative(b) == f.derivative(b).derivative(a));
      }
    }
  }
}

TEST_CASE("arithmetic basics") {
  auto r = ring({"x", "y"});
  CHECK(p("x + y", r) * p("x + y", r) == p("x^2 + 2*x*y + y^2", r));
  CHECK((p("x^3 - y", r) * Polynomial::zero(r)).is_zero());
  CHECK(p("(1/2)*x - (1/2)*x", r).is_zero());
  CHECK_THROWS_AS(p("x", r) + p("x", ring({"x", "t"})), RingMismatchError);
}

TEST_CASE("square of the optimality family against the convolution oracle") {
  auto r = ring({"x", "y"});
  Polynomial f = p("x^2*y^2 + x^5 + y^5", r);
  Polynomial square = f.pow(2);
  CHECK(square == oracle::naive_multiply(f, f));
  CHECK(square.term_count() == 6);
  CHECK(square.coefficient(Monomial({7, 2})) == Rational(2));
  CHECK(square.coefficient(Monomial({2, 7})) == Rational(2));
  CHECK(square.coefficient(Monomial({5, 5})) == Rational(2));
}

TEST_CASE("power by squaring equals naive power") {
  testutil::Gen gen(31);
  auto r = ring({"x", "y"});
  for (int i = 0; i < 60; ++i) {
    Polynomial f = gen.polynomial(r, 4, 3);
    int k = gen.int_in(0, 4);
    CHECK(f.pow(k) == oracle::naive_power(f, k));
  }
}

TEST_CASE("ring axioms on random triples") {
  testutil::Gen gen(47);
  auto r = ring({"x", "y"});
  for (int i = 0; i < 1000; ++i) {
    Polynomial a = gen.polynomial(r, 4, 3);
    Polynomial b = gen.polynomial(r, 4, 3);
    Polynomial c = gen.polynomial(r, 4, 3);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("variable permutation and scaling") {
  auto r = ring({"x", "y"});
  Polynomial f = p("x^2*y + 3*x", r);
  CHECK(f.permute_variables({1, 0}) == p("x*y^2 + 3*y", r));
  CHECK(f.scale_variables({Rational(2), Rational(Integer(1), Integer(3))}) ==
        p("(4/3)*x^2*y + 6*x", r));
  CHECK_THROWS_AS(f.permute_variables({0, 0}), DomainError);
  CHECK_THROWS_AS(f.scale_variables({Rational(0), Rational(1)}), DomainError);
}

TEST_CASE("leading term under both order kinds") {
  auto r = ring({"x", "y"});
  Polynomial f = p("x + x^2", r);
  MonomialOrder global(OrderKind::GlobalDegRevLex, 2);
  MonomialOrder local(OrderKind::LocalNegDegRevLex, 2);
  CHECK(f.leading_term(global).first == Monomial({2, 0}));
  CHECK(f.leading_term(local).first == Monomial({1, 0}));
  CHECK_THROWS_AS(Polynomial::zero(r).leading_term(global), DomainError);
}
