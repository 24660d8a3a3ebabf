#pragma once

#include <optional>
#include <vector>

#include "singlab/limits.hpp"
#include "singlab/monomial.hpp"
#include "singlab/monomial_order.hpp"
#include "singlab/polynomial.hpp"

namespace singlab {

// Generating set whose leading terms generate the leading ideal: a Groebner
// basis for global orders, a standard basis in the sense of Mora for local
// ones. Generators are monic and minimal (no leading monomial divides
// another); tails are reduced against the other generators, in the local
// case as far as the step budget allows.
class StandardBasis {
 public:
  StandardBasis(std::vector<Polynomial> generators, MonomialOrder order);

  const std::vector<Polynomial>& generators() const { return generators_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Monomial>& leading_monomials() const {
    return leading_monomials_;
  }
  const RingPtr& ring() const;

  // Membership of p in the ideal, decided inside the localization at the
  // origin when the order is local. Equivalent to normal_form(p) == 0.
  bool contains(const Polynomial& p,
                const ResourceLimits& limits = ResourceLimits()) const;

 private:
  std::vector<Polynomial> generators_;
  MonomialOrder order_;
  std::vector<Monomial> leading_monomials_;
};

// Division remainder. For global orders this is the classical multivariate
// division; for local orders Mora's ecart-guided variant, where intermediate
// results may join the reducer pool and the result r satisfies
// u*p = sum q_i*G[i] + r for some unit u of the local ring (u = 1 globally).
// No monomial of r is divisible by a leading monomial of the final reducer
// set.
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& reducers,
                       const MonomialOrder& order,
                       const ResourceLimits& limits = ResourceLimits());

// Buchberger's algorithm (global) / Mora's tangent-cone algorithm (local)
// with normal pair selection and the coprime-lcm and chain criteria.
// Deterministic for fixed input.
StandardBasis compute_standard_basis(const std::vector<Polynomial>& generators,
                                     const MonomialOrder& order,
                                     const ResourceLimits& limits = ResourceLimits());

// Membership of p in the ideal generated by gens inside the local ring at
// the origin. Membership in the analytic local ring agrees: the completion
// is faithfully flat over the algebraic localization, so deciding through
// the localization is exact.
bool ideal_membership_local(const Polynomial& p, const std::vector<Polynomial>& gens,
                            const ResourceLimits& limits = ResourceLimits());

// Exact witness for a positive membership answer:
//   unit * p == sum cofactors[i] * basis.generators()[i]
// with unit = 1 for global orders and unit(0) != 0 for local ones. The
// identity is re-verified by exact polynomial arithmetic before returning.
struct MembershipCertificate {
  Polynomial unit;
  std::vector<Polynomial> cofactors;
};
std::optional<MembershipCertificate> membership_certificate(
    const Polynomial& p, const StandardBasis& basis,
    const ResourceLimits& limits = ResourceLimits());

// Minimal generators of the leading ideal and, when every variable axis
// meets the leading ideal, the finite list of standard monomials (the
// monomials divisible by no generator).
struct Staircase {
  std::vector<Monomial> minimal_generators;
  bool finite = false;
  std::vector<Monomial> standard_monomials;  // populated only when finite

  std::uint64_t count() const { return standard_monomials.size(); }
};
Staircase staircase(const StandardBasis& basis);

}  // namespace singlab
