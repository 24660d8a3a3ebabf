#pragma once

#include <optional>
#include <string>
#include <vector>

#include "singlab/jacobian.hpp"
#include "singlab/rational.hpp"

namespace singlab {

// Where a minimal exponent value came from. It is never derived from a
// Bernstein-Sato computation here; every value is auditable to a closed
// form or to user input.
enum class AlphaProvenance {
  QuasiHomogeneous,  // sum of the weights of an isolated singularity
  FabFamily,         // the product-plus-powers family, value 1/a
  ThomSebastiani,    // sum over a join of disjoint-variable summands
  Supplied,          // given on the command line or in a corpus record
};
std::string provenance_label(AlphaProvenance provenance);

struct MinimalExponent {
  Rational value;
  AlphaProvenance provenance;
};

// Sum of weights; valid for a quasi-homogeneous isolated singularity.
MinimalExponent alpha_quasihomogeneous(const WeightVector& weights);

// 1/a for prod x_i^a + sum x_i^b with a >= 2, b > d*a, d >= 2.
MinimalExponent alpha_fab(int a, int b, int d);

// Additivity over a sum of functions in disjoint variables.
MinimalExponent alpha_thom_sebastiani(const MinimalExponent& left,
                                      const MinimalExponent& right);

// floor(d - 2*alpha) + 1, exact rational floor.
long long bound_theorem1(int dimension, const Rational& alpha);

// The verified inequalities. Labels follow the report schema.
enum class BoundId {
  AlphaAtMostHalfDim,     // (1)  alpha <= d/2
  EbsUpperBound,          // (3)  ebs <= floor(d - 2*alpha) + 1
  NilpotenceVsEbs,        // (7)  no <= ebs
  NilpotenceUpperBound,   // (8)  no <= floor(d - 2*alpha) + 1
  RationalSingularities,  // (11) ebs <= d - 2 when alpha > 1
};
std::string bound_id_label(BoundId id);

struct BoundVerdict {
  BoundId id;
  Rational lhs;
  Rational rhs;
  bool holds = false;  // lhs <= rhs
  bool tight = false;  // lhs == rhs
};

struct SkippedBound {
  BoundId id;
  std::string reason;
};

struct BoundEvaluation {
  std::vector<BoundVerdict> verdicts;
  std::vector<SkippedBound> skipped;

  bool all_hold() const;
};

// One verdict per applicable inequality, inapplicable ones listed with a
// reason. Inequality (7) and (8) need a supplied nilpotence order and an
// isolated singularity; (11) is gated on alpha > 1.
BoundEvaluation evaluate_bounds(const SingularityProfile& profile, int ebs,
                                const std::optional<MinimalExponent>& alpha,
                                std::optional<int> nilpotence_order);

}  // namespace singlab
