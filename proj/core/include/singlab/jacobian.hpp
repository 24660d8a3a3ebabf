#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "singlab/limits.hpp"
#include "singlab/polynomial.hpp"
#include "singlab/standard_basis.hpp"

namespace singlab {

// Positive weights making every support exponent vector m of f satisfy
// sum w_i m_i = 1.
struct WeightVector {
  std::vector<Rational> weights;

  Rational sum() const;
  friend bool operator==(const WeightVector& a, const WeightVector& b) {
    return a.weights == b.weights;
  }
};

struct MilnorNumber {
  enum class Kind { Finite, Infinite };
  Kind kind = Kind::Finite;
  std::uint64_t value = 0;  // meaningful only when finite

  static MilnorNumber finite(std::uint64_t v) { return {Kind::Finite, v}; }
  static MilnorNumber infinite() { return {Kind::Infinite, 0}; }
  bool is_finite() const { return kind == Kind::Finite; }
  std::string str() const;
  friend bool operator==(const MilnorNumber& a, const MilnorNumber& b) {
    return a.kind == b.kind && (a.kind == Kind::Infinite || a.value == b.value);
  }
};

enum class Isolated { Yes, No, Unknown };

struct SingularityProfile {
  int dimension = 0;
  bool singular_at_origin = false;
  Isolated isolated = Isolated::Unknown;
  std::optional<MilnorNumber> milnor;  // absent when a resource cap was hit
};

// Local standard basis of the Jacobian ideal (partials of f) at the origin.
StandardBasis jacobian_standard_basis(const Polynomial& f,
                                      const ResourceLimits& limits = ResourceLimits());

// True iff every partial derivative of f vanishes at the origin.
bool singular_at_origin(const Polynomial& f);

// Smallest k >= 1 with f^k in the Jacobian ideal inside the local ring at
// the origin. Requires f(0) = 0 and a singularity at the origin. The answer
// is classically at most the variable count; exceeding it raises
// InternalError because it can only mean an engine bug.
int briancon_skoda_exponent(const Polynomial& f,
                            const ResourceLimits& limits = ResourceLimits());
int briancon_skoda_exponent(const Polynomial& f, const StandardBasis& jacobian_basis,
                            const ResourceLimits& limits = ResourceLimits());

// Dimension of the local ring modulo the Jacobian ideal, via the staircase
// count of a local standard basis.
MilnorNumber milnor_number(const Polynomial& f,
                           const ResourceLimits& limits = ResourceLimits());
MilnorNumber milnor_number_from(const Staircase& jacobian_staircase);

// Exact solve of sum w_i m_i = 1 over the support of f. `weights` is set on
// success; `inconclusive` marks an underdetermined system where the bounded
// search for positive free values failed, as opposed to a definitive no.
struct WeightDetection {
  std::optional<WeightVector> weights;
  bool inconclusive = false;
};
WeightDetection is_weighted_homogeneous(const Polynomial& f);

SingularityProfile singularity_profile(const Polynomial& f,
                                       const ResourceLimits& limits = ResourceLimits());

}  // namespace singlab
