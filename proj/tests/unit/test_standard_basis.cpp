#include <doctest.h>

#include <algorithm>
#include <set>

#include "singlab/errors.hpp"
#include "singlab/standard_basis.hpp"

#include "newton_number.hpp"
#include "test_util.hpp"

using namespace singlab;
using testutil::p;
using testutil::ring;

namespace {

MonomialOrder local2() { return {OrderKind::LocalNegDegRevLex, 2}; }
MonomialOrder global2() { return {OrderKind::GlobalDegRevLex, 2}; }

std::set<std::vector<int>> lead_set(const StandardBasis& basis) {
  std::set<std::vector<int>> leads;
  for (const Monomial& m : basis.leading_monomials()) leads.insert(m.exponents());
  return leads;
}

}  // namespace

TEST_CASE("oracle self-check: plane Newton numbers") {
  CHECK(oracle::newton_number_2d({{2, 2}, {5, 0}, {0, 5}}) == 11);
  CHECK(oracle::newton_number_2d({{3, 3}, {7, 0}, {0, 7}}) == 29);
  CHECK(oracle::newton_number_2d({{3, 0}, {0, 5}}) == 8);
  CHECK(oracle::newton_number_2d({{2, 0}, {0, 3}}) == 2);
  CHECK(oracle::newton_number_2d({{2, 0}, {0, 2}}) == 1);
  // Not convenient: no y-axis intercept.
  CHECK(!oracle::newton_number_2d({{2, 0}, {1, 1}}).has_value());
}

TEST_CASE("normal form examples") {
  auto r = ring({"x", "y"});

  CHECK(normal_form(p("y", r), {p("x", r)}, local2()) == p("y", r));
  CHECK(normal_form(p("x + x^2", r), {p("x", r)}, global2()).is_zero());
  CHECK(normal_form(p("x^2", r), {p("x^2 - x^3", r)}, local2()).is_zero());
}

TEST_CASE("normal form leaves no reducible monomial behind") {
  auto r = ring({"x", "y"});
  // Remainder supported off the leading ideal (x^2, y^3).
  Polynomial f = p("x^3*y + x^2 + x*y^3 + x*y + 1", r);
  std::vector<Polynomial> gens{p("x^2 - x^3", r), p("y^3 + y^5", r)};
  Polynomial rem = normal_form(f, gens, local2());
  for (const auto& [mono, coeff] : rem.terms()) {
    CHECK(!Monomial({2, 0}).divides(mono));
    CHECK(!Monomial({0, 3}).divides(mono));
  }
  CHECK(!rem.is_zero());
}

TEST_CASE("membership certificate for the unit example") {
  auto r = ring({"x", "y"});
  MonomialOrder order = local2();
  StandardBasis basis({p("x^2 - x^3", r)}, order);

  auto cert = membership_certificate(p("x^2", r), basis);
  REQUIRE(cert.has_value());
  // (1 - x) * x^2 == 1 * (x^2 - x^3)
  CHECK(cert->unit == p("1 - x", r));
  CHECK(cert->cofactors.size() == 1);
  CHECK(cert->unit * p("x^2", r) == cert->cofactors[0] * p("x^2 - x^3", r));
  CHECK(!cert->unit.constant_term().is_zero());

  CHECK(!membership_certificate(p("x", r), basis).has_value());
}

TEST_CASE("standard basis examples") {
  auto r = ring({"x", "y"});

  StandardBasis monomials =
      compute_standard_basis({p("x^2", r), p("y^3", r)}, local2());
  CHECK(lead_set(monomials) ==
        std::set<std::vector<int>>{{2, 0}, {0, 3}});
  CHECK(monomials.generators().size() == 2);

  StandardBasis unit_factor = compute_standard_basis({p("x - x^2", r)}, local2());
  CHECK(lead_set(unit_factor) == std::set<std::vector<int>>{{1, 0}});

  // Jacobian ideal of the a=2, b=5 optimality family member.
  Polynomial f = p("x^2*y^2 + x^5 + y^5", r);
  StandardBasis jacobian = compute_standard_basis(
      {p("2*x*y^2 + 5*x^4", r), p("2*x^2*y + 5*y^4", r)}, local2());
  Staircase st = staircase(jacobian);
  REQUIRE(st.finite);
  auto expected = oracle::newton_number_2d({{2, 2}, {5, 0}, {0, 5}});
  REQUIRE(expected.has_value());
  CHECK(st.count() == static_cast<std::uint64_t>(*expected));  // 11

  CHECK(!jacobian.contains(f));
}

TEST_CASE("local membership examples") {
  auto r = ring({"x", "y"});
  CHECK(!ideal_membership_local(p("x", r), {p("x^2", r), p("y", r)}));
  CHECK(ideal_membership_local(p("x", r), {p("x - x^2", r)}));
}

TEST_CASE("staircase shapes") {
  auto r = ring({"x", "y"});
  StandardBasis rect = compute_standard_basis({p("x^2", r), p("y^4", r)}, local2());
  Staircase st = staircase(rect);
  REQUIRE(st.finite);
  CHECK(st.count() == 8);

  auto r1 = ring({"x"});
  StandardBasis line = compute_standard_basis(
      {parse_polynomial("x", r1)}, MonomialOrder(OrderKind::LocalNegDegRevLex, 1));
  Staircase st1 = staircase(line);
  REQUIRE(st1.finite);
  CHECK(st1.count() == 1);
  CHECK(st1.standard_monomials[0].is_constant());

  StandardBasis axis = compute_standard_basis({p("x", r)}, local2());
  CHECK(!staircase(axis).finite);
}

TEST_CASE("staircase count equals codimension for pure powers") {
  testutil::Gen gen(3);
  auto r = ring({"x", "y"});
  for (int i = 0; i < 20; ++i) {
    int a = gen.int_in(1, 7);
    int b = gen.int_in(1, 7);
    StandardBasis basis = compute_standard_basis(
        {Polynomial::term(r, Monomial({a, 0}), Rational(1)),
         Polynomial::term(r, Monomial({0, b}), Rational(1))},
        local2());
    Staircase st = staircase(basis);
    REQUIRE(st.finite);
    CHECK(st.count() == static_cast<std::uint64_t>(a) * b);
  }
}

TEST_CASE("idempotence: recomputing a basis keeps the leading ideal") {
  auto r = ring({"x", "y"});
  std::vector<std::vector<Polynomial>> inputs{
      {p("2*x*y^2 + 5*x^4", r), p("2*x^2*y + 5*y^4", r)},
      {p("x - x^2", r), p("y^3 - x*y^4", r)},
      {p("x^2 + y^3", r), p("x*y", r)},
  };
  for (auto kind : {OrderKind::GlobalDegRevLex, OrderKind::LocalNegDegRevLex}) {
    MonomialOrder order(kind, 2);
    for (const auto& gens : inputs) {
      StandardBasis first = compute_standard_basis(gens, order);
      StandardBasis second = compute_standard_basis(first.generators(), order);
      CHECK(lead_set(first) == lead_set(second));
    }
  }
}

TEST_CASE("global membership implies local membership for homogeneous ideals") {
  testutil::Gen gen(13);
  auto r = ring({"x", "y"});
  auto random_homogeneous = [&](int degree) {
    Polynomial acc = Polynomial::zero(r);
    for (int e = 0; e <= degree; ++e) {
      Rational c = gen.rational(3);
      if (!c.is_zero()) {
        acc = acc + Polynomial::term(r, Monomial({e, degree - e}), c);
      }
    }
    return acc;
  };
  int checked = 0;
  for (int i = 0; i < 120 && checked < 25; ++i) {
    Polynomial g1 = random_homogeneous(gen.int_in(1, 3));
    Polynomial g2 = random_homogeneous(gen.int_in(1, 3));
    Polynomial candidate = random_homogeneous(gen.int_in(1, 4));
    if (g1.is_zero() || g2.is_zero() || candidate.is_zero()) continue;
    StandardBasis global_basis = compute_standard_basis({g1, g2}, global2());
    if (!global_basis.contains(candidate)) continue;
    ++checked;
    CHECK(ideal_membership_local(candidate, {g1, g2}));
  }
  CHECK(checked > 0);
}

TEST_CASE("membership certificates on random members") {
  testutil::Gen gen(29);
  auto r = ring({"x", "y"});
  MonomialOrder order = local2();
  std::vector<Polynomial> gens{p("2*x*y^2 + 5*x^4", r), p("2*x^2*y + 5*y^4", r)};
  StandardBasis basis = compute_standard_basis(gens, order);
  for (int i = 0; i < 40; ++i) {
    // Random combination of the basis, a guaranteed member.
    Polynomial member = Polynomial::zero(r);
    for (const Polynomial& g : basis.generators()) {
      member = member + gen.polynomial(r, 3, 2) * g;
    }
    if (member.is_zero()) continue;
    auto cert = membership_certificate(member, basis);
    REQUIRE(cert.has_value());
    Polynomial rhs = Polynomial::zero(r);
    for (std::size_t k = 0; k < cert->cofactors.size(); ++k) {
      rhs = rhs + cert->cofactors[k] * basis.generators()[k];
    }
    CHECK(cert->unit * member == rhs);
    CHECK(!cert->unit.constant_term().is_zero());
  }
}

TEST_CASE("resource caps raise the dedicated error") {
  auto r = ring({"x", "y"});
  ResourceLimits tiny;
  tiny.max_reduction_steps = 2;
  CHECK_THROWS_AS(
      compute_standard_basis({p("2*x*y^2 + 5*x^4", r), p("2*x^2*y + 5*y^4", r)},
                             local2(), tiny),
      ResourceLimitError);

  ResourceLimits no_pairs;
  no_pairs.max_pairs = 0;
  CHECK_THROWS_AS(
      compute_standard_basis({p("x^2 + y^3", r), p("x*y", r)}, local2(), no_pairs),
      ResourceLimitError);
}
