#include "singlab/jacobian.hpp"

#include <algorithm>

#include "singlab/errors.hpp"

namespace singlab {

Rational WeightVector::sum() const {
  Rational total;
  for (const Rational& w : weights) total += w;
  return total;
}

std::string MilnorNumber::str() const {
  return is_finite() ? std::to_string(value) : std::string("infinite");
}

StandardBasis jacobian_standard_basis(const Polynomial& f,
                                      const ResourceLimits& limits) {
  std::vector<Polynomial> partials = partial_derivatives(f);
  std::vector<Polynomial> gens;
  for (Polynomial& p : partials) {
    if (!p.is_zero()) gens.push_back(std::move(p));
  }
  MonomialOrder order(OrderKind::LocalNegDegRevLex, f.variable_count());
  if (gens.empty()) {
    return StandardBasis(std::vector<Polynomial>{}, order);  // zero ideal
  }
  return compute_standard_basis(gens, order, limits);
}

bool singular_at_origin(const Polynomial& f) {
  for (const Polynomial& partial : partial_derivatives(f)) {
    if (!partial.constant_term().is_zero()) return false;
  }
  return true;
}

int briancon_skoda_exponent(const Polynomial& f, const ResourceLimits& limits) {
  return briancon_skoda_exponent(f, jacobian_standard_basis(f, limits), limits);
}

int briancon_skoda_exponent(const Polynomial& f, const StandardBasis& jacobian_basis,
                            const ResourceLimits& limits) {
  if (!f.constant_term().is_zero()) {
    throw DomainError("Briancon-Skoda exponent requires f(0) = 0");
  }
  if (!singular_at_origin(f)) {
    throw DomainError("Briancon-Skoda exponent requires a singularity at the origin");
  }
  const auto& gens = jacobian_basis.generators();
  const MonomialOrder& order = jacobian_basis.order();
  const int dimension = static_cast<int>(f.variable_count());

  // One basis serves every power; only normal forms of successive powers are
  // recomputed. Units introduced by local reduction do not affect zero-ness,
  // so NF(f * NF(f^(k-1))) decides f^k membership.
  Polynomial reduced = normal_form(f, gens, order, limits);
  for (int k = 1; k <= dimension; ++k) {
    if (reduced.is_zero()) return k;
    if (k < dimension) reduced = normal_form(f * reduced, gens, order, limits);
  }
  throw InternalError(
      "power beyond the dimension still outside the Jacobian ideal; "
      "this contradicts the classical bound and signals an engine bug");
}

MilnorNumber milnor_number(const Polynomial& f, const ResourceLimits& limits) {
  if (!f.constant_term().is_zero()) {
    throw DomainError("Milnor number requires f(0) = 0");
  }
  return milnor_number_from(staircase(jacobian_standard_basis(f, limits)));
}

MilnorNumber milnor_number_from(const Staircase& jacobian_staircase) {
  if (!jacobian_staircase.finite) return MilnorNumber::infinite();
  return MilnorNumber::finite(jacobian_staircase.count());
}

namespace {

// Row-reduce [A | 1] over the rationals. Returns pivot column per row.
struct Reduction {
  std::vector<std::vector<Rational>> rows;  // each row: n coefficients + rhs
  std::vector<std::size_t> pivot_columns;
  bool consistent = true;
};

Reduction gauss(std::vector<std::vector<Rational>> rows, std::size_t ncols) {
  Reduction red;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t pivot = rows.size();
    for (std::size_t r = rank; r < rows.size(); ++r) {
      if (!rows[r][col].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    Rational inv = rows[rank][col].reciprocal();
    for (Rational& entry : rows[rank]) entry *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      Rational factor = rows[r][col];
      for (std::size_t c = 0; c <= ncols; ++c) {
        rows[r][c] -= factor * rows[rank][c];
      }
    }
    red.pivot_columns.push_back(col);
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r) {
    if (!rows[r][ncols].is_zero()) red.consistent = false;
  }
  rows.resize(rank);
  red.rows = std::move(rows);
  return red;
}

// Candidate values for free weights, tried smallest-index-first. Plausible
// weights of desk-scale singularities live in (0, 1].
const Rational kFreeCandidates[] = {
    Rational(1, 2), Rational(1, 3), Rational(1, 4), Rational(1, 5),
    Rational(1, 6), Rational(2, 3), Rational(3, 4), Rational(2, 5),
    Rational(3, 5), Rational(1),    Rational(5, 6), Rational(1, 8),
};

}  // namespace

WeightDetection is_weighted_homogeneous(const Polynomial& f) {
  if (f.is_zero()) throw DomainError("weight detection requires f != 0");
  if (!f.constant_term().is_zero()) {
    throw DomainError("weight detection requires f(0) = 0");
  }
  const std::size_t n = f.variable_count();
  std::vector<std::vector<Rational>> rows;
  rows.reserve(f.term_count());
  for (const auto& [mono, coeff] : f.terms()) {
    std::vector<Rational> row(n + 1);
    for (std::size_t i = 0; i < n; ++i) row[i] = Rational(mono.exponent(i));
    row[n] = Rational(1);
    rows.push_back(std::move(row));
  }

  Reduction red = gauss(std::move(rows), n);
  if (!red.consistent) return {std::nullopt, false};

  std::vector<bool> is_pivot(n, false);
  for (std::size_t col : red.pivot_columns) is_pivot[col] = true;
  std::vector<std::size_t> free_columns;
  for (std::size_t col = 0; col < n; ++col) {
    if (!is_pivot[col]) free_columns.push_back(col);
  }

  auto solve_with = [&](const std::vector<Rational>& free_values)
      -> std::optional<WeightVector> {
    std::vector<Rational> w(n);
    for (std::size_t k = 0; k < free_columns.size(); ++k) {
      w[free_columns[k]] = free_values[k];
    }
    for (std::size_t r = 0; r < red.rows.size(); ++r) {
      Rational value = red.rows[r][n];
      for (std::size_t k = 0; k < free_columns.size(); ++k) {
        value -= red.rows[r][free_columns[k]] * free_values[k];
      }
      w[red.pivot_columns[r]] = value;
    }
    for (const Rational& entry : w) {
      if (entry.sign() <= 0) return std::nullopt;
    }
    return WeightVector{std::move(w)};
  };

  if (free_columns.empty()) {
    // Unique solution: positivity decides definitively.
    return {solve_with({}), false};
  }
  if (free_columns.size() > 3) return {std::nullopt, true};

  // Bounded search over the candidate grid for positive free values.
  const std::size_t base = std::size(kFreeCandidates);
  std::size_t combos = 1;
  for (std::size_t k = 0; k < free_columns.size(); ++k) combos *= base;
  for (std::size_t code = 0; code < combos; ++code) {
    std::vector<Rational> values;
    std::size_t rest = code;
    for (std::size_t k = 0; k < free_columns.size(); ++k) {
      values.push_back(kFreeCandidates[rest % base]);
      rest /= base;
    }
    if (auto w = solve_with(values)) return {std::move(w), false};
  }
  return {std::nullopt, true};
}

SingularityProfile singularity_profile(const Polynomial& f,
                                       const ResourceLimits& limits) {
  SingularityProfile profile;
  profile.dimension = static_cast<int>(f.variable_count());
  profile.singular_at_origin = singular_at_origin(f);
  try {
    Staircase st = staircase(jacobian_standard_basis(f, limits));
    MilnorNumber mu = milnor_number_from(st);
    profile.isolated = mu.is_finite() ? Isolated::Yes : Isolated::No;
    profile.milnor = mu;
  } catch (const ResourceLimitError&) {
    profile.isolated = Isolated::Unknown;
    profile.milnor = std::nullopt;
  }
  return profile;
}

}  // namespace singlab
