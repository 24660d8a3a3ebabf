#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "singlab/jacobian.hpp"
#include "singlab/limits.hpp"
#include "singlab/polynomial.hpp"

namespace singlab {

// Spectral numbers of a quasi-homogeneous isolated singularity: the weights
// of the shifted monomial basis of the Milnor algebra. Sorted ascending;
// symmetric about dimension/2.
struct Spectrum {
  std::vector<Rational> entries;

  std::uint64_t mu() const { return entries.size(); }
};

// Basis classes of the Milnor algebra whose shifted weight is >= alpha: one
// level of the quotient filtration induced on the Milnor algebra.
struct FiltrationLevel {
  Rational alpha;
  std::vector<Monomial> monomials;
};

// Enumerates the staircase basis of the Milnor algebra and maps each basis
// monomial m to sum w_i*(m_i + 1). Requires f quasi-homogeneous with the
// given weights, singular at the origin, isolated.
Spectrum spectrum_qh(const Polynomial& f, const WeightVector& weights,
                     const ResourceLimits& limits = ResourceLimits());

// Smallest entry; equals the weight sum for a valid spectrum.
Rational minimal_spectral_number(const Spectrum& spectrum);

FiltrationLevel filtration_level(const Polynomial& f, const WeightVector& weights,
                                 const Rational& alpha,
                                 const ResourceLimits& limits = ResourceLimits());

// Vanishing check for the quotient filtration: every monomial x^m with
// total degree <= degree_cap whose shifted weight strictly exceeds
// dimension - weight_sum must lie in the Jacobian ideal locally. Monomials
// at exactly the threshold are exempt; when such a monomial indexes a basis
// class it witnesses non-membership instead.
struct VanishingCheck {
  bool passed = false;
  Rational threshold;             // dimension - weight sum
  std::uint64_t checked = 0;      // membership calls made
  std::optional<Monomial> counterexample;
};
VanishingCheck check_theorem2_qh(const Polynomial& f, const WeightVector& weights,
                                 int degree_cap,
                                 const ResourceLimits& limits = ResourceLimits());

// Cap that makes the enumeration exhaustive in effect: beyond it every
// monomial is divisible by a leading-ideal generator.
int default_degree_cap(const Polynomial& f, const Staircase& jacobian_staircase);

// Consistency of the weight shift under multiplication by f: for
// quasi-homogeneous f the class of f in the Milnor algebra is zero (Euler
// relation), so the shifted inclusion holds trivially. The executable
// content is the exact Euler identity and the membership f in (partials).
struct ShiftCheck {
  bool euler_identity = false;  // f == sum w_i x_i f_i, exact
  bool membership = false;      // engine agrees that f lies in the ideal
  bool passed = false;
};
ShiftCheck check_shift_consistency(const Spectrum& spectrum, const Polynomial& f,
                                   const WeightVector& weights,
                                   const ResourceLimits& limits = ResourceLimits());

}  // namespace singlab
