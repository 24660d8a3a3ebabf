#include "singlab/spectrum.hpp"

#include <algorithm>

#include "singlab/errors.hpp"
#include "singlab/standard_basis.hpp"

namespace singlab {

namespace {

void require_quasihomogeneous(const Polynomial& f, const WeightVector& w) {
  if (f.is_zero()) throw DomainError("zero polynomial");
  if (w.weights.size() != f.variable_count()) {
    throw DomainError("weight vector length does not match variable count");
  }
  for (const Rational& entry : w.weights) {
    if (entry.sign() <= 0) throw DomainError("weights must be positive");
  }
  for (const auto& [mono, coeff] : f.terms()) {
    if (!(weighted_degree(mono, w.weights) == Rational(1))) {
      throw DomainError("not quasi-homogeneous with the given weights");
    }
  }
  if (!singular_at_origin(f)) {
    throw DomainError("requires a singularity at the origin");
  }
}

Staircase isolated_staircase(const Polynomial& f, const ResourceLimits& limits) {
  Staircase st = staircase(jacobian_standard_basis(f, limits));
  if (!st.finite) throw DomainError("singularity is not isolated");
  return st;
}

Rational shifted_weight(const Monomial& m, const WeightVector& w) {
  return weighted_degree(m.shifted_by_one(), w.weights);
}

}  // namespace

Spectrum spectrum_qh(const Polynomial& f, const WeightVector& weights,
                     const ResourceLimits& limits) {
  require_quasihomogeneous(f, weights);
  Staircase st = isolated_staircase(f, limits);
  Spectrum spectrum;
  spectrum.entries.reserve(st.standard_monomials.size());
  for (const Monomial& m : st.standard_monomials) {
    spectrum.entries.push_back(shifted_weight(m, weights));
  }
  std::sort(spectrum.entries.begin(), spectrum.entries.end());
  return spectrum;
}

Rational minimal_spectral_number(const Spectrum& spectrum) {
  if (spectrum.entries.empty()) throw DomainError("empty spectrum");
  return spectrum.entries.front();
}

FiltrationLevel filtration_level(const Polynomial& f, const WeightVector& weights,
                                 const Rational& alpha, const ResourceLimits& limits) {
  require_quasihomogeneous(f, weights);
  Staircase st = isolated_staircase(f, limits);
  FiltrationLevel level{alpha, {}};
  for (const Monomial& m : st.standard_monomials) {
    if (shifted_weight(m, weights) >= alpha) level.monomials.push_back(m);
  }
  return level;
}

int default_degree_cap(const Polynomial& f, const Staircase& jacobian_staircase) {
  int max_generator_degree = 0;
  for (const Monomial& g : jacobian_staircase.minimal_generators) {
    max_generator_degree = std::max(max_generator_degree, g.total_degree());
  }
  return 1 + max_generator_degree + std::max(f.total_degree(), 0);
}

VanishingCheck check_theorem2_qh(const Polynomial& f, const WeightVector& weights,
                                 int degree_cap, const ResourceLimits& limits) {
  require_quasihomogeneous(f, weights);
  StandardBasis basis = jacobian_standard_basis(f, limits);
  if (!staircase(basis).finite) throw DomainError("singularity is not isolated");
  if (degree_cap < 0) throw DomainError("negative degree cap");

  const std::size_t n = f.variable_count();
  VanishingCheck check;
  check.threshold = Rational(static_cast<long long>(n)) - weights.sum();
  check.passed = true;

  // Odometer over all exponent vectors with total degree <= degree_cap.
  std::vector<int> exponents(n, 0);
  while (true) {
    Monomial m{std::vector<int>(exponents)};
    // Strict inequality: classes at exactly the threshold are exempt.
    if (shifted_weight(m, weights) > check.threshold) {
      ++check.checked;
      if (!basis.contains(Polynomial::term(f.ring(), m, Rational(1)), limits)) {
        check.passed = false;
        check.counterexample = m;
        return check;
      }
    }
    std::size_t pos = n;
    bool advanced = false;
    while (pos-- > 0) {
      ++exponents[pos];
      int total = 0;
      for (int e : exponents) total += e;
      if (total <= degree_cap) {
        advanced = true;
        break;
      }
      exponents[pos] = 0;
      if (pos == 0) break;
    }
    if (!advanced) break;
  }
  return check;
}

ShiftCheck check_shift_consistency(const Spectrum& spectrum, const Polynomial& f,
                                   const WeightVector& weights,
                                   const ResourceLimits& limits) {
  require_quasihomogeneous(f, weights);
  if (spectrum.entries.empty()) throw DomainError("empty spectrum");

  ShiftCheck check;
  // Euler relation: f = sum w_i x_i f_i, exact over the rationals.
  Polynomial euler = Polynomial::zero(f.ring());
  for (std::size_t i = 0; i < f.variable_count(); ++i) {
    euler = euler + Polynomial::variable(f.ring(), i)
                        .scaled(weights.weights[i]) * f.derivative(i);
  }
  check.euler_identity = euler == f;
  check.membership = jacobian_standard_basis(f, limits).contains(f, limits);
  check.passed = check.euler_identity && check.membership;
  return check;
}

}  // namespace singlab
