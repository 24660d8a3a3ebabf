#pragma once

#include <string>
#include <vector>

#include "singlab/families.hpp"
#include "singlab/parser.hpp"
#include "singlab/polynomial.hpp"

namespace testutil {

using namespace singlab;

inline RingPtr ring(std::initializer_list<const char*> names) {
  return Ring::make(names);
}

inline Polynomial p(const std::string& text, const RingPtr& r) {
  return parse_polynomial(text, r);
}

// Deterministic random data built on the library's splittable stream.
struct Gen {
  explicit Gen(std::uint64_t seed) : stream(seed) {}

  SplitMix64 stream;

  int int_in(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(stream.next_below(
                    static_cast<std::uint64_t>(hi - lo + 1)));
  }

  Rational rational(int magnitude = 6) {
    int num = int_in(-magnitude, magnitude);
    int den = int_in(1, magnitude);
    return Rational(num) / Rational(den);
  }

  Rational positive_rational(int magnitude = 6) {
    int num = int_in(1, magnitude);
    int den = int_in(1, magnitude);
    return Rational(num) / Rational(den);
  }

  Monomial monomial(std::size_t nvars, int max_exp = 5) {
    std::vector<int> exps(nvars);
    for (auto& e : exps) e = int_in(0, max_exp);
    return Monomial(std::move(exps));
  }

  Polynomial polynomial(const RingPtr& r, int max_terms = 5, int max_exp = 4) {
    Polynomial acc = Polynomial::zero(r);
    int terms = int_in(0, max_terms);
    for (int t = 0; t < terms; ++t) {
      Rational c = rational();
      if (c.is_zero()) continue;
      acc = acc + Polynomial::term(r, monomial(r->variable_count(), max_exp), c);
    }
    return acc;
  }
};

}  // namespace testutil
