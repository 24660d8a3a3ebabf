#include <doctest.h>

#include "singlab/errors.hpp"
#include "singlab/monomial_order.hpp"

#include "test_util.hpp"

using namespace singlab;

namespace {

Monomial m(std::vector<int> e) { return Monomial(std::move(e)); }

}  // namespace

TEST_CASE("weighted degree examples") {
  std::vector<Rational> w{Rational(Integer(1), Integer(3)),
                          Rational(Integer(1), Integer(5))};
  CHECK(weighted_degree(m({1, 3}), w) == Rational(Integer(14), Integer(15)));
  CHECK(weighted_degree(m({0, 0}), w) == Rational(0));
  std::vector<Rational> quarter{Rational(Integer(1), Integer(4)),
                                Rational(Integer(1), Integer(4))};
  CHECK(weighted_degree(m({2, 2}), quarter) == Rational(1));
  CHECK_THROWS_AS(weighted_degree(m({1, 2, 3}), w), DomainError);
}

TEST_CASE("weighted degree is additive") {
  testutil::Gen gen(5);
  for (int i = 0; i < 300; ++i) {
    std::vector<Rational> w{gen.positive_rational(), gen.positive_rational(),
                            gen.positive_rational()};
    Monomial a = gen.monomial(3);
    Monomial b = gen.monomial(3);
    CHECK(weighted_degree(a * b, w) ==
          weighted_degree(a, w) + weighted_degree(b, w));
  }
}

TEST_CASE("global order basics") {
  MonomialOrder ord(OrderKind::GlobalDegRevLex, 2);
  CHECK(ord.greater(m({1, 0}), m({0, 0})));        // x > 1
  CHECK(ord.greater(m({2, 0}), m({1, 1})));        // revlex tie at degree 2
  CHECK(ord.greater(m({1, 1}), m({0, 2})));
  CHECK(ord.compare(m({1, 2}), m({1, 2})) == 0);
}

TEST_CASE("local order puts 1 on top") {
  MonomialOrder ord(OrderKind::LocalNegDegRevLex, 3);
  CHECK(ord.greater(m({0, 0, 0}), m({1, 0, 0})));
  CHECK(ord.greater(m({0, 0, 0}), m({0, 0, 1})));
  CHECK(ord.greater(m({1, 0, 0}), m({1, 1, 0})));
  // Same revlex tiebreak as the global kind.
  CHECK(ord.greater(m({2, 0, 0}), m({1, 1, 0})));
}

TEST_CASE("weighted local order refines weighted degree upward") {
  std::vector<Rational> w{Rational(Integer(1), Integer(3)),
                          Rational(Integer(1), Integer(5))};
  MonomialOrder ord(OrderKind::LocalNegDegRevLex, w);
  // wdeg(y^2) = 2/5 > 1/3 = wdeg(x), so x is closer to the lead.
  CHECK(ord.greater(m({1, 0}), m({0, 2})));
  CHECK(ord.greater(m({0, 1}), m({1, 1})));
  CHECK_THROWS_AS(MonomialOrder(OrderKind::LocalNegDegRevLex,
                                std::vector<Rational>{Rational(0), Rational(1)}),
                  DomainError);
}

TEST_CASE("order properties on random triples") {
  testutil::Gen gen(17);
  for (OrderKind kind :
       {OrderKind::GlobalDegRevLex, OrderKind::LocalNegDegRevLex}) {
    for (bool weighted : {false, true}) {
      MonomialOrder ord =
          weighted ? MonomialOrder(kind, std::vector<Rational>{
                                             gen.positive_rational(),
                                             gen.positive_rational(),
                                             gen.positive_rational()})
                   : MonomialOrder(kind, 3);
      for (int i = 0; i < 400; ++i) {
        Monomial a = gen.monomial(3);
        Monomial b = gen.monomial(3);
        Monomial c = gen.monomial(3);

        // Totality and antisymmetry.
        int ab = ord.compare(a, b);
        int ba = ord.compare(b, a);
        CHECK(((ab > 0 && ba < 0) || (ab < 0 && ba > 0) ||
               (ab == 0 && ba == 0)));
        if (ab == 0) CHECK(a == b);

        // Transitivity.
        if (ab >= 0 && ord.compare(b, c) >= 0) CHECK(ord.compare(a, c) >= 0);

        // Multiplicativity.
        if (ab < 0) CHECK(ord.less(a * c, b * c));
      }
    }
  }
}
