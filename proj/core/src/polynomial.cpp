#include "singlab/polynomial.hpp"

#include <algorithm>

#include "singlab/errors.hpp"

namespace singlab {

Polynomial Polynomial::zero(RingPtr ring) {
  if (!ring) throw DomainError("null ring");
  return Polynomial(std::move(ring), {});
}

Polynomial Polynomial::constant(RingPtr ring, Rational value) {
  Polynomial result = zero(std::move(ring));
  if (!value.is_zero()) {
    result.terms_.emplace(Monomial(result.variable_count()), std::move(value));
  }
  return result;
}

Polynomial Polynomial::term(RingPtr ring, Monomial monomial, Rational coefficient) {
  Polynomial result = zero(std::move(ring));
  if (monomial.size() != result.variable_count()) {
    throw RingMismatchError("monomial arity does not match ring");
  }
  if (!coefficient.is_zero()) {
    result.terms_.emplace(std::move(monomial), std::move(coefficient));
  }
  return result;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (!ring) throw DomainError("null ring");
  if (index >= ring->variable_count()) throw DomainError("variable index out of range");
  std::vector<int> exponents(ring->variable_count(), 0);
  exponents[index] = 1;
  return term(std::move(ring), Monomial(std::move(exponents)), Rational(1));
}

Rational Polynomial::coefficient(const Monomial& monomial) const {
  auto it = terms_.find(monomial);
  return it == terms_.end() ? Rational() : it->second;
}

Rational Polynomial::constant_term() const {
  return coefficient(Monomial(variable_count()));
}

int Polynomial::total_degree() const {
  int degree = -1;
  for (const auto& [monomial, coeff] : terms_) {
    degree = std::max(degree, monomial.total_degree());
  }
  return degree;
}

Rational Polynomial::max_weighted_degree(std::span<const Rational> weights) const {
  if (is_zero()) throw DomainError("weighted degree of the zero polynomial");
  bool first = true;
  Rational best;
  for (const auto& [monomial, coeff] : terms_) {
    Rational degree = weighted_degree(monomial, weights);
    if (first || degree > best) best = degree;
    first = false;
  }
  return best;
}

void Polynomial::add_term(TermMap& into, const Monomial& monomial,
                          const Rational& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = into.emplace(monomial, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) into.erase(it);
  }
}

void Polynomial::require_same_ring(const Polynomial& other) const {
  if (!same_ring(ring_, other.ring_)) {
    throw RingMismatchError("polynomials over different rings");
  }
}

Polynomial Polynomial::operator-() const {
  TermMap result = terms_;
  for (auto& [monomial, coeff] : result) coeff = -coeff;
  return Polynomial(ring_, std::move(result));
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  require_same_ring(other);
  TermMap result = terms_;
  for (const auto& [monomial, coeff] : other.terms_) {
    add_term(result, monomial, coeff);
  }
  return Polynomial(ring_, std::move(result));
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  require_same_ring(other);
  TermMap result = terms_;
  for (const auto& [monomial, coeff] : other.terms_) {
    add_term(result, monomial, -coeff);
  }
  return Polynomial(ring_, std::move(result));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require_same_ring(other);
  TermMap result;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      add_term(result, ma * mb, ca * cb);
    }
  }
  return Polynomial(ring_, std::move(result));
}

Polynomial Polynomial::scaled(const Rational& factor) const {
  if (factor.is_zero()) return zero(ring_);
  TermMap result = terms_;
  for (auto& [monomial, coeff] : result) coeff *= factor;
  return Polynomial(ring_, std::move(result));
}

Polynomial Polynomial::times_term(const Rational& coefficient,
                                  const Monomial& monomial) const {
  if (coefficient.is_zero()) return zero(ring_);
  TermMap result;
  for (const auto& [m, c] : terms_) {
    result.emplace(m * monomial, c * coefficient);
  }
  return Polynomial(ring_, std::move(result));
}

Polynomial Polynomial::pow(int exponent) const {
  if (exponent < 0) throw DomainError("negative polynomial power");
  Polynomial result = constant(ring_, Rational(1));
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    if (exponent >>= 1) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t variable_index) const {
  if (variable_index >= variable_count()) {
    throw DomainError("variable index out of range");
  }
  TermMap result;
  for (const auto& [monomial, coeff] : terms_) {
    int e = monomial.exponent(variable_index);
    if (e == 0) continue;
    std::vector<int> exponents = monomial.exponents();
    exponents[variable_index] = e - 1;
    add_term(result, Monomial(std::move(exponents)), coeff * Rational(e));
  }
  return Polynomial(ring_, std::move(result));
}

std::pair<Monomial, Rational> Polynomial::leading_term(
    const MonomialOrder& order) const {
  if (is_zero()) throw DomainError("leading term of the zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
    if (order.greater(it->first, best->first)) best = it;
  }
  return {best->first, best->second};
}

Polynomial Polynomial::permute_variables(const std::vector<std::size_t>& perm) const {
  if (perm.size() != variable_count()) throw DomainError("permutation arity mismatch");
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t target : perm) {
    if (target >= perm.size() || seen[target]) throw DomainError("not a permutation");
    seen[target] = true;
  }
  TermMap result;
  for (const auto& [monomial, coeff] : terms_) {
    std::vector<int> exponents(perm.size(), 0);
    for (std::size_t i = 0; i < perm.size(); ++i) {
      exponents[perm[i]] = monomial.exponent(i);
    }
    result.emplace(Monomial(std::move(exponents)), coeff);
  }
  return Polynomial(ring_, std::move(result));
}

Polynomial Polynomial::scale_variables(const std::vector<Rational>& factors) const {
  if (factors.size() != variable_count()) throw DomainError("scale arity mismatch");
  for (const Rational& c : factors) {
    if (c.is_zero()) throw DomainError("variable scale factor must be nonzero");
  }
  TermMap result;
  for (const auto& [monomial, coeff] : terms_) {
    Rational scaled_coeff = coeff;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (monomial.exponent(i) != 0) {
        scaled_coeff *= factors[i].pow(monomial.exponent(i));
      }
    }
    result.emplace(monomial, std::move(scaled_coeff));
  }
  return Polynomial(ring_, std::move(result));
}

Polynomial Polynomial::with_ring(RingPtr ring) const {
  if (!ring) throw DomainError("null ring");
  if (ring->variable_count() != variable_count()) {
    throw RingMismatchError("ring arity mismatch in renaming");
  }
  return Polynomial(std::move(ring), terms_);
}

std::vector<Polynomial> partial_derivatives(const Polynomial& f) {
  std::vector<Polynomial> partials;
  partials.reserve(f.variable_count());
  for (std::size_t i = 0; i < f.variable_count(); ++i) {
    partials.push_back(f.derivative(i));
  }
  return partials;
}

}  // namespace singlab
