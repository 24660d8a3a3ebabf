#pragma once

#include <cstddef>
#include <vector>

namespace singlab {

// Exponent vector of a power product. Exponents are machine integers with
// overflow checks; the length is fixed by the ambient ring context.
class Monomial {
 public:
  explicit Monomial(std::size_t variable_count)
      : exponents_(variable_count, 0) {}
  explicit Monomial(std::vector<int> exponents);

  std::size_t size() const { return exponents_.size(); }
  int exponent(std::size_t index) const { return exponents_[index]; }
  const std::vector<int>& exponents() const { return exponents_; }

  bool is_constant() const;
  int total_degree() const;

  Monomial operator*(const Monomial& other) const;
  Monomial pow(int exponent) const;
  bool divides(const Monomial& multiple) const;
  Monomial divided_by(const Monomial& divisor) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);

  // Componentwise +1 on every exponent; the shift entering spectral weights.
  Monomial shifted_by_one() const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exponents_ == b.exponents_;
  }

  // Structural (lexicographic) order for container keys; unrelated to any
  // monomial order used by division.
  struct LexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
      return a.exponents_ < b.exponents_;
    }
  };

 private:
  std::vector<int> exponents_;
};

}  // namespace singlab
