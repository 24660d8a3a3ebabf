#include <doctest.h>

#include <sstream>

#include "singlab/corpus_io.hpp"
#include "singlab/errors.hpp"
#include "singlab/families.hpp"
#include "singlab/jacobian.hpp"
#include "singlab/parser.hpp"

#include "newton_number.hpp"
#include "test_util.hpp"

using namespace singlab;
using testutil::p;
using testutil::ring;

TEST_CASE("family constructor examples") {
  CorpusEntry f25 = make_fab(2, 5, 2);
  CHECK(f25.polynomial == p("x^2*y^2 + x^5 + y^5", ring({"x", "y"})));
  CHECK(*f25.expected.ebs == 2);
  CHECK(f25.expected.alpha->value == Rational(Integer(1), Integer(2)));
  CHECK(f25.expected.nilpotence->value == 2);

  CorpusEntry f3103 = make_fab(3, 10, 3);
  CHECK(f3103.polynomial ==
        p("x^3*y^3*z^3 + x^10 + y^10 + z^10", ring({"x", "y", "z"})));

  CHECK_THROWS_AS(make_fab(2, 4, 2), DomainError);
}

TEST_CASE("brieskorn pham constructor") {
  CorpusEntry bp23 = make_brieskorn_pham({2, 3});
  CHECK(bp23.polynomial == p("x^2 + y^3", ring({"x", "y"})));
  CHECK(*bp23.expected.milnor == MilnorNumber::finite(2));
  CHECK(*bp23.expected.ebs == 1);

  CorpusEntry quadric = make_brieskorn_pham({2, 2, 2, 2});
  CHECK(quadric.expected.alpha->value == Rational(2));

  CorpusEntry bp35 = make_brieskorn_pham({3, 5});
  CHECK(*bp35.expected.milnor == MilnorNumber::finite(8));

  CHECK_THROWS_AS(make_brieskorn_pham({2, 1}), DomainError);
}

TEST_CASE("family expectations agree with computed invariants") {
  for (const CorpusEntry& entry :
       {make_fab(2, 5, 2), make_fab(3, 7, 2), make_brieskorn_pham({3, 5}),
        make_brieskorn_pham({2, 2, 2})}) {
    if (entry.expected.ebs) {
      CHECK(briancon_skoda_exponent(entry.polynomial) == *entry.expected.ebs);
    }
    if (entry.expected.milnor) {
      CHECK(milnor_number(entry.polynomial) == *entry.expected.milnor);
    }
  }
}

TEST_CASE("plane family members match the Newton number oracle") {
  for (auto [a, b] : {std::pair{2, 5}, std::pair{2, 7}, std::pair{3, 7}}) {
    CorpusEntry entry = make_fab(a, b, 2);
    auto nu = oracle::newton_number_2d({{a, a}, {b, 0}, {0, b}});
    REQUIRE(nu.has_value());
    CHECK(milnor_number(entry.polynomial) ==
          MilnorNumber::finite(static_cast<std::uint64_t>(*nu)));
  }
}

TEST_CASE("disjoint sums") {
  CorpusEntry join = sum_disjoint(make_fab(2, 5, 2), make_brieskorn_pham({2, 2}));
  CHECK(join.polynomial ==
        p("x^2*y^2 + x^5 + y^5 + u1^2 + u2^2", ring({"x", "y", "u1", "u2"})));
  CHECK(*join.expected.ebs == 2);
  CHECK(join.expected.alpha->value == Rational(Integer(3), Integer(2)));

  // Inherits through the other slot as well.
  CorpusEntry swapped =
      sum_disjoint(make_brieskorn_pham({2, 2}), make_fab(2, 5, 2));
  CHECK(*swapped.expected.ebs == 2);

  // Expected Milnor numbers multiply.
  CorpusEntry bp_join =
      sum_disjoint(make_brieskorn_pham({2, 3}), make_brieskorn_pham({3, 5}));
  CHECK(*bp_join.expected.milnor == MilnorNumber::finite(16));
  CHECK(bp_join.expected.weights->weights.size() == 4);

  // A smooth or zero right-hand side is rejected.
  auto r = ring({"x", "y"});
  CorpusEntry smooth("smooth", p("x + y^2", r), CorpusSource::Random);
  CHECK_THROWS_AS(sum_disjoint(make_fab(2, 5, 2), smooth), DomainError);
  CorpusEntry zero("zero", Polynomial::zero(r), CorpusSource::Random);
  CHECK_THROWS_AS(sum_disjoint(make_fab(2, 5, 2), zero), DomainError);
}

TEST_CASE("joins commute up to the block permutation") {
  CorpusEntry left = make_brieskorn_pham({2, 3});
  CorpusEntry right = make_brieskorn_pham({4, 5});
  CorpusEntry ab = sum_disjoint(left, right);
  CorpusEntry ba = sum_disjoint(right, left);
  // Swap the two blocks of ba and rename onto ab's ring.
  Polynomial swapped =
      ba.polynomial.permute_variables({2, 3, 0, 1}).with_ring(ab.polynomial.ring());
  CHECK(swapped == ab.polynomial);
}

TEST_CASE("fresh naming avoids collisions") {
  auto r = ring({"u1", "y"});
  CorpusEntry left("left", p("u1^2 + y^3", r), CorpusSource::Random);
  CorpusEntry join = sum_disjoint(left, make_brieskorn_pham({2}));
  // "u1" is taken, so the right block moves to the next prefix.
  CHECK(join.polynomial.ring()->variables() ==
        std::vector<std::string>{"u1", "y", "v1"});
}

TEST_CASE("random entries are deterministic and singular") {
  CorpusEntry a = random_isolated(1, 2, 5);
  CorpusEntry b = random_isolated(1, 2, 5);
  CHECK(a.polynomial == b.polynomial);
  CHECK(a.label == b.label);
  CHECK(a.retries == b.retries);

  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
    for (int d : {2, 3}) {
      CorpusEntry entry = random_isolated(seed, d, d == 2 ? 5 : 4);
      const Polynomial& f = entry.polynomial;
      CHECK(f.constant_term().is_zero());
      CHECK(singular_at_origin(f));
      MilnorNumber mu = milnor_number(f);
      REQUIRE(mu.is_finite());
      CHECK(mu.value >= 1);
      // Entirely inside the square of the maximal ideal.
      for (const auto& [mono, coeff] : f.terms()) {
        CHECK(mono.total_degree() >= 2);
      }
    }
  }
  CHECK_THROWS_AS(random_isolated(1, 4, 5), DomainError);
  CHECK_THROWS_AS(random_isolated(1, 2, 9), DomainError);
}

TEST_CASE("every bundled entry vanishes and is singular at the origin") {
  for (const CorpusEntry& entry : paper_families_corpus()) {
    CHECK(entry.polynomial.constant_term().is_zero());
    CHECK(singular_at_origin(entry.polynomial));
  }
  std::vector<CorpusEntry> stress = stress_corpus(7, 50);
  CHECK(stress.size() == 50);
  for (const CorpusEntry& entry : stress) {
    CHECK(entry.polynomial.constant_term().is_zero());
    CHECK(singular_at_origin(entry.polynomial));
    CHECK(entry.polynomial.variable_count() <= 3);
  }
}

TEST_CASE("corpus files round trip") {
  std::vector<CorpusEntry> entries = paper_families_corpus();
  entries.push_back(random_isolated(5, 2, 5));
  std::string text = corpus_to_text(entries);

  std::istringstream input(text);
  std::vector<CorpusEntry> parsed = read_corpus(input);
  REQUIRE(parsed.size() == entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    CHECK(parsed[i].label == entries[i].label);
    CHECK(parsed[i].polynomial == entries[i].polynomial);
    CHECK(parsed[i].expected.ebs == entries[i].expected.ebs);
    CHECK(parsed[i].seed == entries[i].seed);
    if (entries[i].expected.alpha) {
      CHECK(parsed[i].expected.alpha->value == entries[i].expected.alpha->value);
      CHECK(parsed[i].expected.alpha->provenance ==
            entries[i].expected.alpha->provenance);
    }
    if (entries[i].expected.nilpotence) {
      CHECK(*parsed[i].expected.nilpotence == *entries[i].expected.nilpotence);
    }
  }
  // Bit-compatible across a write/read/write cycle.
  CHECK(corpus_to_text(parsed) == text);

  std::istringstream commented("# comment line\n\n" + text);
  CHECK(read_corpus(commented).size() == entries.size());

  std::istringstream broken("{\"label\": \"x\"}\n");
  CHECK_THROWS_AS(read_corpus(broken), ParseError);
  std::istringstream garbage("not json\n");
  CHECK_THROWS_AS(read_corpus(garbage), ParseError);
}
