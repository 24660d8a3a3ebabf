#include "singlab/minimal_exponent.hpp"

#include <algorithm>

#include "singlab/errors.hpp"

namespace singlab {

std::string provenance_label(AlphaProvenance provenance) {
  switch (provenance) {
    case AlphaProvenance::QuasiHomogeneous: return "quasi-homogeneous";
    case AlphaProvenance::FabFamily: return "f_ab";
    case AlphaProvenance::ThomSebastiani: return "thom-sebastiani";
    case AlphaProvenance::Supplied: return "supplied";
  }
  return "unknown";
}

MinimalExponent alpha_quasihomogeneous(const WeightVector& weights) {
  if (weights.weights.empty()) throw DomainError("empty weight vector");
  for (const Rational& w : weights.weights) {
    if (w.sign() <= 0) throw DomainError("weights must be positive");
  }
  return {weights.sum(), AlphaProvenance::QuasiHomogeneous};
}

MinimalExponent alpha_fab(int a, int b, int d) {
  if (a < 2) throw DomainError("family parameter a must be at least 2");
  if (d < 2) throw DomainError("family parameter d must be at least 2");
  if (b <= d * a) throw DomainError("family parameter b must exceed d*a");
  return {Rational(1) / Rational(a), AlphaProvenance::FabFamily};
}

MinimalExponent alpha_thom_sebastiani(const MinimalExponent& left,
                                      const MinimalExponent& right) {
  if (left.value.sign() <= 0 || right.value.sign() <= 0) {
    throw DomainError("minimal exponents must be positive");
  }
  return {left.value + right.value, AlphaProvenance::ThomSebastiani};
}

long long bound_theorem1(int dimension, const Rational& alpha) {
  if (dimension < 1) throw DomainError("dimension must be positive");
  if (alpha.sign() <= 0) throw DomainError("alpha must be positive");
  Rational gap = Rational(dimension) - Rational(2) * alpha;
  return static_cast<long long>(gap.floor()) + 1;
}

std::string bound_id_label(BoundId id) {
  switch (id) {
    case BoundId::AlphaAtMostHalfDim: return "(1)";
    case BoundId::EbsUpperBound: return "(3)";
    case BoundId::NilpotenceVsEbs: return "(7)";
    case BoundId::NilpotenceUpperBound: return "(8)";
    case BoundId::RationalSingularities: return "(11)";
  }
  return "?";
}

bool BoundEvaluation::all_hold() const {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const BoundVerdict& v) { return v.holds; });
}

namespace {

BoundVerdict make_verdict(BoundId id, Rational lhs, Rational rhs) {
  BoundVerdict v{id, std::move(lhs), std::move(rhs), false, false};
  v.holds = v.lhs <= v.rhs;
  v.tight = v.lhs == v.rhs;
  return v;
}

}  // namespace

BoundEvaluation evaluate_bounds(const SingularityProfile& profile, int ebs,
                                const std::optional<MinimalExponent>& alpha,
                                std::optional<int> nilpotence_order) {
  BoundEvaluation out;
  const int d = profile.dimension;

  if (!alpha) {
    out.skipped.push_back({BoundId::AlphaAtMostHalfDim, "alpha unavailable"});
  } else if (!profile.singular_at_origin) {
    out.skipped.push_back({BoundId::AlphaAtMostHalfDim, "not singular at the origin"});
  } else {
    out.verdicts.push_back(make_verdict(BoundId::AlphaAtMostHalfDim, alpha->value,
                                        Rational(d) / Rational(2)));
  }

  if (!alpha) {
    out.skipped.push_back({BoundId::EbsUpperBound, "alpha unavailable"});
  } else {
    out.verdicts.push_back(make_verdict(BoundId::EbsUpperBound, Rational(ebs),
                                        Rational(bound_theorem1(d, alpha->value))));
  }

  const bool isolated = profile.isolated == Isolated::Yes;
  if (!nilpotence_order) {
    out.skipped.push_back({BoundId::NilpotenceVsEbs, "nilpotence order not supplied"});
    out.skipped.push_back({BoundId::NilpotenceUpperBound, "nilpotence order not supplied"});
  } else if (!isolated) {
    // The comparison is only meaningful for isolated singularities.
    out.skipped.push_back({BoundId::NilpotenceVsEbs, "singularity not isolated"});
    out.skipped.push_back({BoundId::NilpotenceUpperBound, "singularity not isolated"});
  } else {
    out.verdicts.push_back(make_verdict(BoundId::NilpotenceVsEbs,
                                        Rational(*nilpotence_order), Rational(ebs)));
    if (!alpha) {
      out.skipped.push_back({BoundId::NilpotenceUpperBound, "alpha unavailable"});
    } else {
      out.verdicts.push_back(
          make_verdict(BoundId::NilpotenceUpperBound, Rational(*nilpotence_order),
                       Rational(bound_theorem1(d, alpha->value))));
    }
  }

  if (!alpha) {
    out.skipped.push_back({BoundId::RationalSingularities, "alpha unavailable"});
  } else if (!(alpha->value > Rational(1))) {
    out.skipped.push_back(
        {BoundId::RationalSingularities, "alpha <= 1: not a rational singularity"});
  } else {
    out.verdicts.push_back(make_verdict(BoundId::RationalSingularities, Rational(ebs),
                                        Rational(d - 2)));
  }
  return out;
}

}  // namespace singlab
