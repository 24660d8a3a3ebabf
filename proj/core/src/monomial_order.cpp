#include "singlab/monomial_order.hpp"

#include <algorithm>

#include "singlab/errors.hpp"

namespace singlab {

Rational weighted_degree(const Monomial& m, std::span<const Rational> weights) {
  if (weights.size() != m.size()) {
    throw DomainError("weight vector length does not match variable count");
  }
  Rational sum;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (m.exponent(i) != 0) sum += weights[i] * Rational(m.exponent(i));
  }
  return sum;
}

MonomialOrder::MonomialOrder(OrderKind kind, std::size_t variable_count)
    : kind_(kind), weights_(variable_count, Rational(1)), unit_weights_(true) {
  if (variable_count == 0) throw DomainError("order over zero variables");
}

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<Rational> weights)
    : kind_(kind), weights_(std::move(weights)) {
  if (weights_.empty()) throw DomainError("order over zero variables");
  for (const Rational& w : weights_) {
    if (w.sign() <= 0) throw DomainError("order weights must be positive");
  }
  unit_weights_ = std::all_of(weights_.begin(), weights_.end(),
                              [](const Rational& w) { return w.is_one(); });
}

Rational MonomialOrder::weighted_degree(const Monomial& m) const {
  if (unit_weights_) return Rational(m.total_degree());
  return singlab::weighted_degree(m, weights_);
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != weights_.size() || b.size() != weights_.size()) {
    throw RingMismatchError("monomial arity does not match order");
  }
  int degree_cmp = 0;
  if (unit_weights_) {
    int da = a.total_degree();
    int db = b.total_degree();
    degree_cmp = (da > db) - (da < db);
  } else {
    Rational da = weighted_degree(a);
    Rational db = weighted_degree(b);
    degree_cmp = (da > db) - (da < db);
  }
  if (degree_cmp != 0) {
    // Descending degree leads globally, ascending degree leads locally.
    return is_global() ? degree_cmp : -degree_cmp;
  }
  // Graded-reverse-lexicographic tiebreak, identical for both kinds: the
  // monomial whose last differing exponent is smaller is the larger one.
  for (std::size_t i = a.size(); i-- > 0;) {
    int diff = a.exponent(i) - b.exponent(i);
    if (diff != 0) return diff < 0 ? 1 : -1;
  }
  return 0;
}

}  // namespace singlab
