#pragma once

#include <span>
#include <vector>

#include "singlab/monomial.hpp"
#include "singlab/rational.hpp"

namespace singlab {

// Sum of weights[i] * exponent(i), exact. Throws on length mismatch.
Rational weighted_degree(const Monomial& m, std::span<const Rational> weights);

enum class OrderKind {
  // Well-order: higher weighted degree first, graded-reverse-lex tiebreak.
  GlobalDegRevLex,
  // Local order with 1 > x_i: lower weighted degree first, same tiebreak.
  LocalNegDegRevLex,
};

// Total multiplicative order on exponent vectors. Both kinds refine weighted
// degree comparison; weights default to all ones.
class MonomialOrder {
 public:
  MonomialOrder(OrderKind kind, std::size_t variable_count);
  MonomialOrder(OrderKind kind, std::vector<Rational> weights);

  OrderKind kind() const { return kind_; }
  bool is_global() const { return kind_ == OrderKind::GlobalDegRevLex; }
  std::size_t variable_count() const { return weights_.size(); }
  const std::vector<Rational>& weights() const { return weights_; }
  bool has_unit_weights() const { return unit_weights_; }

  Rational weighted_degree(const Monomial& m) const;

  // > 0 when a is closer to the leading position than b, < 0 when smaller,
  // 0 exactly on equal exponent vectors.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) < 0;
  }
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) > 0;
  }

 private:
  OrderKind kind_;
  std::vector<Rational> weights_;
  bool unit_weights_;
};

}  // namespace singlab
