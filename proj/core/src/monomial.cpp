#include "singlab/monomial.hpp"

#include <algorithm>
#include <limits>

#include "singlab/errors.hpp"

namespace singlab {

namespace {

constexpr int kExponentCap = std::numeric_limits<int>::max() / 4;

int checked_add(int a, int b) {
  long long sum = static_cast<long long>(a) + b;
  if (sum > kExponentCap) throw DomainError("monomial exponent overflow");
  return static_cast<int>(sum);
}

}  // namespace

Monomial::Monomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  for (int e : exponents_) {
    if (e < 0) throw DomainError("negative exponent in monomial");
    if (e > kExponentCap) throw DomainError("monomial exponent overflow");
  }
}

bool Monomial::is_constant() const {
  return std::all_of(exponents_.begin(), exponents_.end(),
                     [](int e) { return e == 0; });
}

int Monomial::total_degree() const {
  int sum = 0;
  for (int e : exponents_) sum = checked_add(sum, e);
  return sum;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (size() != other.size()) throw RingMismatchError("monomial arity mismatch");
  std::vector<int> result(size());
  for (std::size_t i = 0; i < size(); ++i) {
    result[i] = checked_add(exponents_[i], other.exponents_[i]);
  }
  return Monomial(std::move(result));
}

Monomial Monomial::pow(int exponent) const {
  if (exponent < 0) throw DomainError("negative monomial power");
  std::vector<int> result(size());
  for (std::size_t i = 0; i < size(); ++i) {
    long long value = static_cast<long long>(exponents_[i]) * exponent;
    if (value > kExponentCap) throw DomainError("monomial exponent overflow");
    result[i] = static_cast<int>(value);
  }
  return Monomial(std::move(result));
}

bool Monomial::divides(const Monomial& multiple) const {
  if (size() != multiple.size()) throw RingMismatchError("monomial arity mismatch");
  for (std::size_t i = 0; i < size(); ++i) {
    if (exponents_[i] > multiple.exponents_[i]) return false;
  }
  return true;
}

Monomial Monomial::divided_by(const Monomial& divisor) const {
  if (size() != divisor.size()) throw RingMismatchError("monomial arity mismatch");
  std::vector<int> result(size());
  for (std::size_t i = 0; i < size(); ++i) {
    if (divisor.exponents_[i] > exponents_[i]) {
      throw DomainError("monomial division with remainder");
    }
    result[i] = exponents_[i] - divisor.exponents_[i];
  }
  return Monomial(std::move(result));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw RingMismatchError("monomial arity mismatch");
  std::vector<int> result(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    result[i] = std::max(a.exponents_[i], b.exponents_[i]);
  }
  return Monomial(std::move(result));
}

Monomial Monomial::shifted_by_one() const {
  std::vector<int> result(size());
  for (std::size_t i = 0; i < size(); ++i) {
    result[i] = checked_add(exponents_[i], 1);
  }
  return Monomial(std::move(result));
}

}  // namespace singlab
