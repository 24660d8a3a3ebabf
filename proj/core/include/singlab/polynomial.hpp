#pragma once

#include <map>
#include <utility>
#include <vector>

#include "singlab/monomial.hpp"
#include "singlab/monomial_order.hpp"
#include "singlab/rational.hpp"
#include "singlab/ring.hpp"

namespace singlab {

// Sparse multivariate polynomial over Rational. Terms are kept canonical:
// no zero coefficients, one entry per monomial. Values are immutable in
// spirit; every operation returns a fresh polynomial.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, Monomial::LexLess>;

  static Polynomial zero(RingPtr ring);
  static Polynomial constant(RingPtr ring, Rational value);
  static Polynomial term(RingPtr ring, Monomial monomial, Rational coefficient);
  static Polynomial variable(RingPtr ring, std::size_t index);

  const RingPtr& ring() const { return ring_; }
  std::size_t variable_count() const { return ring_->variable_count(); }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Monomial& monomial) const;
  Rational constant_term() const;       // value at the origin
  int total_degree() const;             // -1 for the zero polynomial
  Rational max_weighted_degree(std::span<const Rational> weights) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial scaled(const Rational& factor) const;
  Polynomial times_term(const Rational& coefficient, const Monomial& monomial) const;
  Polynomial pow(int exponent) const;   // repeated squaring

  Polynomial derivative(std::size_t variable_index) const;

  // Order-maximal term; throws DomainError on the zero polynomial.
  std::pair<Monomial, Rational> leading_term(const MonomialOrder& order) const;

  // x_{perm[i]} receives the exponent of x_i. perm must be a permutation.
  Polynomial permute_variables(const std::vector<std::size_t>& perm) const;
  // x_i -> c_i * x_i with every c_i nonzero.
  Polynomial scale_variables(const std::vector<Rational>& factors) const;
  // Transplant onto a ring with the same arity (variable renaming).
  Polynomial with_ring(RingPtr ring) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
  }

 private:
  Polynomial(RingPtr ring, TermMap terms)
      : ring_(std::move(ring)), terms_(std::move(terms)) {}

  static void add_term(TermMap& into, const Monomial& monomial,
                       const Rational& coefficient);
  void require_same_ring(const Polynomial& other) const;

  RingPtr ring_;
  TermMap terms_;
};

// All first partials (f_1, ..., f_n) in ring order.
std::vector<Polynomial> partial_derivatives(const Polynomial& f);

}  // namespace singlab
