#include "singlab/standard_basis.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <span>
#include <utility>

#include "singlab/errors.hpp"

namespace singlab {

namespace {

struct Term {
  Monomial mono;
  Rational coeff;
};

// Engine representation: terms strictly descending under the active order.
// Under a local order the front term has minimal weighted degree and the
// back term maximal, so the ecart is back minus front.
using TermVec = std::vector<Term>;

TermVec to_ordered(const Polynomial& p, const MonomialOrder& order) {
  TermVec terms;
  terms.reserve(p.term_count());
  for (const auto& [mono, coeff] : p.terms()) terms.push_back({mono, coeff});
  std::sort(terms.begin(), terms.end(), [&order](const Term& a, const Term& b) {
    return order.greater(a.mono, b.mono);
  });
  return terms;
}

Polynomial to_polynomial(std::span<const Term> terms, const RingPtr& ring) {
  Polynomial result = Polynomial::zero(ring);
  for (const Term& t : terms) {
    result = result + Polynomial::term(ring, t.mono, t.coeff);
  }
  return result;
}

void make_monic(TermVec& terms) {
  if (terms.empty() || terms.front().coeff.is_one()) return;
  Rational inverse = terms.front().coeff.reciprocal();
  for (Term& t : terms) t.coeff *= inverse;
}

Rational ecart_of(std::span<const Term> terms, const MonomialOrder& order) {
  return order.weighted_degree(terms.back().mono) -
         order.weighted_degree(terms.front().mono);
}

// a - c * x^m * b, both inputs strictly descending, result likewise.
TermVec subtract_scaled(std::span<const Term> a, const Rational& c,
                        const Monomial& m, std::span<const Term> b,
                        const MonomialOrder& order) {
  TermVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    Monomial shifted = b[j].mono * m;
    int cmp = order.compare(a[i].mono, shifted);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({std::move(shifted), -(c * b[j].coeff)});
      ++j;
    } else {
      Rational coeff = a[i].coeff - c * b[j].coeff;
      if (!coeff.is_zero()) out.push_back({a[i].mono, std::move(coeff)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].mono * m, -(c * b[j].coeff)});
  return out;
}

// Representation of a tracked value as a*p + sum c[i]*g[i].
struct CertRep {
  TermVec a;
  std::vector<TermVec> c;
};

void rep_subtract_scaled(CertRep& rep, const Rational& q_coeff,
                         const Monomial& q_mono, const CertRep& other,
                         const MonomialOrder& order) {
  rep.a = subtract_scaled(rep.a, q_coeff, q_mono, other.a, order);
  for (std::size_t i = 0; i < rep.c.size(); ++i) {
    rep.c[i] = subtract_scaled(rep.c[i], q_coeff, q_mono, other.c[i], order);
  }
}

struct Reducer {
  const TermVec* terms;
  Rational ecart;
  const CertRep* rep;  // null unless certificates are tracked
};

struct NfOutcome {
  TermVec remainder;
  bool popped = false;   // some head moved to the remainder
  CertRep rep;           // representation of (remainder==0 ? 0 : unused)
};

enum class NfMode {
  // Stop as soon as the head is irreducible; the tail stays as-is. This is
  // the variant the basis loop needs: it leaves S-polynomial tails alone,
  // which keeps intermediate objects small.
  Weak,
  // Pop irreducible heads into the remainder and continue on the tail until
  // nothing is left. Yields remainders supported entirely outside the
  // leading ideal.
  Full,
};

// Working-size guard against runaway intermediate growth; generous compared
// to anything a desk-scale input legitimately produces.
constexpr std::size_t kMaxWorkingTerms = 50000;

// Degree cutoff for zero-dimensional local computations: drop every monomial
// of total degree >= degree. Sound once the maximal ideal to that power is
// known to lie inside the ideal being generated.
void truncate_at(TermVec& terms, int degree) {
  while (!terms.empty() && terms.back().mono.total_degree() >= degree) {
    terms.pop_back();
  }
}

// Shared reduction loop. Global orders use plain multivariate division
// (first divisor wins, the reducer pool never grows). Local orders follow
// Mora: among divisors pick minimal ecart with ties by insertion order, and
// snapshot the current intermediate result into the pool before reducing by
// a higher-ecart reducer; that is what makes the loop terminate without a
// well-order. truncate_degree == 0 means no cutoff.
NfOutcome reduce(NfMode mode, TermVec h, std::span<const TermVec> basis,
                 const MonomialOrder& order, const ResourceLimits& limits,
                 bool track_cert, std::size_t gen_count,
                 int truncate_degree = 0) {
  const bool local = !order.is_global();
  std::vector<Reducer> pool;
  pool.reserve(basis.size());
  std::deque<TermVec> snapshots;
  std::deque<CertRep> snapshot_reps;
  std::deque<CertRep> basis_reps;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].empty()) continue;
    Reducer red{&basis[i], Rational(), nullptr};
    if (local) red.ecart = ecart_of(basis[i], order);
    if (track_cert) {
      CertRep rep;
      rep.c.resize(gen_count);
      rep.c[i] = {Term{Monomial(order.variable_count()), Rational(1)}};
      basis_reps.push_back(std::move(rep));
      red.rep = &basis_reps.back();
    }
    pool.push_back(red);
  }

  NfOutcome out;
  if (track_cert) {
    out.rep.a = {Term{Monomial(order.variable_count()), Rational(1)}};
    out.rep.c.resize(gen_count);
  }

  if (truncate_degree > 0) truncate_at(h, truncate_degree);

  std::size_t steps = 0;
  while (!h.empty()) {
    if (++steps > limits.max_reduction_steps) {
      throw ResourceLimitError("normal form exceeded the reduction step cap");
    }
    if (h.size() > kMaxWorkingTerms) {
      throw ResourceLimitError("normal form working set exceeded the term cap");
    }
    const Monomial& lead = h.front().mono;
    int best = -1;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (!pool[i].terms->front().mono.divides(lead)) continue;
      if (!local) {
        best = static_cast<int>(i);
        break;
      }
      if (best < 0 || pool[i].ecart < pool[best].ecart) best = static_cast<int>(i);
    }
    if (best < 0) {
      if (mode == NfMode::Weak) {
        out.popped = true;
        out.remainder.insert(out.remainder.end(), h.begin(), h.end());
        return out;
      }
      out.popped = true;
      out.remainder.push_back(h.front());
      h.erase(h.begin());
      continue;
    }
    Rational h_ecart;
    if (local) {
      h_ecart = ecart_of(h, order);
      if (pool[best].ecart > h_ecart) {
        snapshots.push_back(h);
        Reducer snap{&snapshots.back(), h_ecart, nullptr};
        if (track_cert) {
          snapshot_reps.push_back(out.rep);
          snap.rep = &snapshot_reps.back();
        }
        pool.push_back(snap);
      }
    }
    const Reducer& red = pool[best];
    Rational q_coeff = h.front().coeff / red.terms->front().coeff;
    Monomial q_mono = lead.divided_by(red.terms->front().mono);
    if (track_cert) {
      rep_subtract_scaled(out.rep, q_coeff, q_mono, *red.rep, order);
    }
    h = subtract_scaled(h, q_coeff, q_mono, *red.terms, order);
    if (truncate_degree > 0) truncate_at(h, truncate_degree);
  }
  return out;
}

TermVec spoly(const TermVec& f, const TermVec& g, const MonomialOrder& order) {
  // Both inputs monic.
  Monomial l = Monomial::lcm(f.front().mono, g.front().mono);
  TermVec left;
  Monomial shift_f = l.divided_by(f.front().mono);
  left.reserve(f.size());
  for (const Term& t : f) left.push_back({t.mono * shift_f, t.coeff});
  return subtract_scaled(left, Rational(1), l.divided_by(g.front().mono), g, order);
}

// Plain tail reduction against the other generators. Rewriting a tail
// monomial under a local order only introduces monomials of higher weighted
// degree, so chains need not terminate; the step budget cuts them off and
// every prefix of the rewrite is a valid generator of the same ideal.
TermVec tail_reduce(TermVec g, const std::vector<const TermVec*>& others,
                    const MonomialOrder& order, std::size_t budget,
                    int truncate_degree) {
  std::size_t pos = 1;
  std::size_t steps = 0;
  while (pos < g.size()) {
    const Monomial& target = g[pos].mono;
    const TermVec* reducer = nullptr;
    for (const TermVec* other : others) {
      if ((*other).front().mono.divides(target)) {
        reducer = other;
        break;
      }
    }
    if (reducer == nullptr) {
      ++pos;
      continue;
    }
    if (++steps > budget) break;
    Rational q_coeff = g[pos].coeff / reducer->front().coeff;
    Monomial q_mono = target.divided_by(reducer->front().mono);
    g = subtract_scaled(g, q_coeff, q_mono, *reducer, order);
    if (truncate_degree > 0) truncate_at(g, truncate_degree);
  }
  return g;
}

struct PairKey {
  Rational degree;
  std::size_t i;
  std::size_t j;

  friend bool operator<(const PairKey& a, const PairKey& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

void validate_inputs(const std::vector<Polynomial>& polys,
                     const MonomialOrder& order) {
  for (const Polynomial& p : polys) {
    if (!same_ring(p.ring(), polys.front().ring())) {
      throw RingMismatchError("generators over different rings");
    }
    if (p.variable_count() != order.variable_count()) {
      throw RingMismatchError("order arity does not match ring");
    }
  }
}

}  // namespace

StandardBasis::StandardBasis(std::vector<Polynomial> generators, MonomialOrder order)
    : generators_(std::move(generators)), order_(std::move(order)) {
  if (generators_.empty()) return;
  validate_inputs(generators_, order_);
  leading_monomials_.reserve(generators_.size());
  for (const Polynomial& g : generators_) {
    if (g.is_zero()) throw DomainError("zero generator in standard basis");
    leading_monomials_.push_back(g.leading_term(order_).first);
  }
}

const RingPtr& StandardBasis::ring() const {
  static const RingPtr kNull;
  return generators_.empty() ? kNull : generators_.front().ring();
}

bool StandardBasis::contains(const Polynomial& p, const ResourceLimits& limits) const {
  return normal_form(p, generators_, order_, limits).is_zero();
}

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& reducers,
                       const MonomialOrder& order, const ResourceLimits& limits) {
  if (p.variable_count() != order.variable_count()) {
    throw RingMismatchError("order arity does not match ring");
  }
  std::vector<TermVec> basis;
  basis.reserve(reducers.size());
  for (const Polynomial& g : reducers) {
    if (!same_ring(g.ring(), p.ring())) {
      throw RingMismatchError("reducer over a different ring");
    }
    if (!g.is_zero()) basis.push_back(to_ordered(g, order));
  }
  NfOutcome out = reduce(NfMode::Full, to_ordered(p, order), basis, order,
                         limits, /*track_cert=*/false, basis.size());
  return to_polynomial(out.remainder, p.ring());
}

StandardBasis compute_standard_basis(const std::vector<Polynomial>& generators,
                                     const MonomialOrder& order,
                                     const ResourceLimits& limits) {
  if (generators.empty()) throw DomainError("empty generator list");
  validate_inputs(generators, order);
  const RingPtr& ring = generators.front().ring();

  std::vector<TermVec> basis;
  for (const Polynomial& g : generators) {
    if (g.is_zero()) continue;
    TermVec terms = to_ordered(g, order);
    make_monic(terms);
    basis.push_back(std::move(terms));
  }

  std::set<PairKey> queue;
  std::set<std::pair<std::size_t, std::size_t>> treated;
  std::size_t pairs_created = 0;

  // Noether-style cutoff for zero-dimensional local ideals: once the leads
  // contain a pure power of every variable, the pigeonhole principle puts
  // every monomial of degree >= C := 1 + sum(e_i - 1) inside the leading
  // ideal, hence (Mora reduction can never strand a head) the C-th power of
  // the maximal ideal inside the ideal itself. Dropping terms of degree
  // > C keeps generating the same ideal by Nakayama and keeps every
  // intermediate object small. Only valid with unit weights, where the
  // order degree is the truncation degree.
  const bool can_truncate = !order.is_global() && order.has_unit_weights();
  const std::size_t nvars = order.variable_count();
  int truncate_degree = 0;
  auto refresh_cutoff = [&]() {
    if (!can_truncate || truncate_degree != 0) return;
    std::vector<int> pure_power(nvars, 0);
    bool unit_ideal = false;
    for (const TermVec& g : basis) {
      const Monomial& lead = g.front().mono;
      if (lead.is_constant()) {
        unit_ideal = true;
        break;
      }
      int axis = -1;
      bool pure = true;
      for (std::size_t v = 0; v < nvars; ++v) {
        if (lead.exponent(v) == 0) continue;
        if (axis >= 0) {
          pure = false;
          break;
        }
        axis = static_cast<int>(v);
      }
      if (!pure || axis < 0) continue;
      int e = lead.exponent(axis);
      if (pure_power[axis] == 0 || e < pure_power[axis]) pure_power[axis] = e;
    }
    int cover = 1;
    if (!unit_ideal) {
      for (int e : pure_power) {
        if (e == 0) return;  // some axis not yet covered
        cover += e - 1;
      }
    }
    truncate_degree = cover + 1;
    for (TermVec& g : basis) truncate_at(g, truncate_degree);
  };
  refresh_cutoff();

  auto add_pairs = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      const Monomial& lm_i = basis[i].front().mono;
      const Monomial& lm_k = basis[k].front().mono;
      Monomial l = Monomial::lcm(lm_i, lm_k);
      if (l == lm_i * lm_k) {
        // Coprime leads: the S-polynomial reduces to zero. Counts as treated
        // for the chain criterion.
        treated.insert({i, k});
        continue;
      }
      if (++pairs_created > limits.max_pairs) {
        throw ResourceLimitError("critical pair cap exceeded");
      }
      queue.insert({order.weighted_degree(l), i, k});
    }
  };
  for (std::size_t k = 0; k < basis.size(); ++k) add_pairs(k);

  while (!queue.empty()) {
    auto [degree, i, j] = *queue.begin();
    queue.erase(queue.begin());
    treated.insert({i, j});

    Monomial l = Monomial::lcm(basis[i].front().mono, basis[j].front().mono);
    bool skip = false;
    for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == i || k == j) continue;
      if (!basis[k].front().mono.divides(l)) continue;
      auto key_ik = std::minmax(i, k);
      auto key_jk = std::minmax(j, k);
      skip = treated.count({key_ik.first, key_ik.second}) > 0 &&
             treated.count({key_jk.first, key_jk.second}) > 0;
    }
    if (skip) continue;

    NfOutcome out = reduce(NfMode::Weak, spoly(basis[i], basis[j], order),
                           basis, order, limits, /*track_cert=*/false,
                           basis.size(), truncate_degree);
    if (out.remainder.empty()) continue;
    make_monic(out.remainder);
    basis.push_back(std::move(out.remainder));
    if (basis.size() > limits.max_basis) {
      throw ResourceLimitError("basis size cap exceeded");
    }
    add_pairs(basis.size() - 1);
    refresh_cutoff();
  }

  // Minimalize: keep the earliest generator for each minimal leading
  // monomial, drop everything with a divisible lead.
  std::vector<bool> dropped(basis.size(), false);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j || dropped[j]) continue;
      const Monomial& lm_i = basis[i].front().mono;
      const Monomial& lm_j = basis[j].front().mono;
      if (lm_j.divides(lm_i) && (!(lm_i == lm_j) || j < i)) {
        dropped[i] = true;
        break;
      }
    }
  }
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!dropped[i]) kept.push_back(i);
  }

  std::vector<TermVec> reduced;
  reduced.reserve(kept.size());
  for (std::size_t idx = 0; idx < kept.size(); ++idx) {
    std::vector<const TermVec*> others;
    for (std::size_t other : kept) {
      if (other != kept[idx]) others.push_back(&basis[other]);
    }
    if (order.is_global()) {
      std::vector<TermVec> other_vecs;
      for (const TermVec* o : others) other_vecs.push_back(*o);
      NfOutcome out = reduce(NfMode::Full, basis[kept[idx]], other_vecs, order,
                             limits, false, other_vecs.size());
      reduced.push_back(std::move(out.remainder));
    } else {
      reduced.push_back(
          tail_reduce(basis[kept[idx]], others, order, 512, truncate_degree));
    }
  }
  for (TermVec& g : reduced) make_monic(g);
  std::sort(reduced.begin(), reduced.end(), [&order](const TermVec& a, const TermVec& b) {
    return order.less(a.front().mono, b.front().mono);
  });

  std::vector<Polynomial> result;
  result.reserve(reduced.size());
  for (const TermVec& g : reduced) result.push_back(to_polynomial(g, ring));
  return StandardBasis(std::move(result), order);
}

bool ideal_membership_local(const Polynomial& p, const std::vector<Polynomial>& gens,
                            const ResourceLimits& limits) {
  MonomialOrder order(OrderKind::LocalNegDegRevLex, p.variable_count());
  StandardBasis basis = compute_standard_basis(gens, order, limits);
  return basis.contains(p, limits);
}

std::optional<MembershipCertificate> membership_certificate(
    const Polynomial& p, const StandardBasis& basis, const ResourceLimits& limits) {
  const MonomialOrder& order = basis.order();
  if (p.variable_count() != order.variable_count()) {
    throw RingMismatchError("order arity does not match ring");
  }
  std::vector<TermVec> gens;
  gens.reserve(basis.generators().size());
  for (const Polynomial& g : basis.generators()) {
    if (!same_ring(g.ring(), p.ring())) {
      throw RingMismatchError("basis over a different ring");
    }
    gens.push_back(to_ordered(g, order));
  }
  NfOutcome out = reduce(NfMode::Full, to_ordered(p, order), gens, order,
                         limits, /*track_cert=*/true, gens.size());
  if (out.popped || !out.remainder.empty()) return std::nullopt;

  // The loop ended with 0 = a*p + sum c_i g_i, so unit = a, cofactors = -c.
  const RingPtr& ring = p.ring();
  MembershipCertificate cert{to_polynomial(out.rep.a, ring), {}};
  cert.cofactors.reserve(out.rep.c.size());
  for (const TermVec& c : out.rep.c) {
    cert.cofactors.push_back(-to_polynomial(c, ring));
  }

  Polynomial lhs = cert.unit * p;
  Polynomial rhs = Polynomial::zero(ring);
  for (std::size_t i = 0; i < cert.cofactors.size(); ++i) {
    rhs = rhs + cert.cofactors[i] * basis.generators()[i];
  }
  bool unit_ok = order.is_global()
                     ? cert.unit == Polynomial::constant(ring, Rational(1))
                     : !cert.unit.constant_term().is_zero();
  if (!(lhs == rhs) || !unit_ok) {
    throw InternalError("membership certificate failed verification");
  }
  return cert;
}

Staircase staircase(const StandardBasis& basis) {
  Staircase result;
  std::vector<Monomial> lms = basis.leading_monomials();
  // Divisibility pruning to the minimal generating set of the leading ideal.
  for (std::size_t i = 0; i < lms.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < lms.size() && minimal; ++j) {
      if (i == j) continue;
      if (lms[j].divides(lms[i]) && (!(lms[i] == lms[j]) || j < i)) minimal = false;
    }
    if (minimal) result.minimal_generators.push_back(lms[i]);
  }

  const std::size_t nvars =
      basis.generators().empty() ? 0 : basis.order().variable_count();
  if (nvars == 0) {
    result.finite = false;
    return result;
  }

  // Finite iff every variable axis meets the leading ideal, i.e. each axis
  // carries a pure power among the minimal generators.
  std::vector<int> bound(nvars, -1);
  for (const Monomial& g : result.minimal_generators) {
    if (g.is_constant()) {
      // Unit ideal: no standard monomials at all.
      result.finite = true;
      return result;
    }
    int axis = -1;
    bool pure = true;
    for (std::size_t v = 0; v < nvars; ++v) {
      if (g.exponent(v) == 0) continue;
      if (axis >= 0) {
        pure = false;
        break;
      }
      axis = static_cast<int>(v);
    }
    if (pure && axis >= 0) bound[axis] = g.exponent(axis);
  }
  for (int b : bound) {
    if (b < 0) {
      result.finite = false;
      return result;
    }
  }
  result.finite = true;

  std::vector<int> exponents(nvars, 0);
  while (true) {
    Monomial candidate{std::vector<int>(exponents)};
    bool standard = true;
    for (const Monomial& g : result.minimal_generators) {
      if (g.divides(candidate)) {
        standard = false;
        break;
      }
    }
    if (standard) result.standard_monomials.push_back(std::move(candidate));

    std::size_t pos = nvars;
    while (pos-- > 0) {
      if (++exponents[pos] < bound[pos]) break;
      exponents[pos] = 0;
      if (pos == 0) return result;
    }
  }
}

}  // namespace singlab
