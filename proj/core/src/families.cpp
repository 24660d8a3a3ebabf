#include "singlab/families.hpp"

#include <algorithm>
#include <set>

#include "singlab/errors.hpp"
#include "singlab/standard_basis.hpp"

namespace singlab {

std::string source_label(CorpusSource source) {
  switch (source) {
    case CorpusSource::Fab: return "fab";
    case CorpusSource::BrieskornPham: return "brieskorn-pham";
    case CorpusSource::Join: return "join";
    case CorpusSource::Random: return "random";
  }
  return "unknown";
}

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
  // Plain modulo keeps streams identical across platforms; the bias is
  // irrelevant at these bound sizes.
  return next() % bound;
}

namespace {

RingPtr standard_ring(int d) {
  static const char* kNames[] = {"x", "y", "z", "w"};
  std::vector<std::string> names;
  if (d <= 4) {
    for (int i = 0; i < d; ++i) names.emplace_back(kNames[i]);
  } else {
    for (int i = 1; i <= d; ++i) names.push_back("x" + std::to_string(i));
  }
  return Ring::make(std::move(names));
}

Monomial axis_power(std::size_t nvars, std::size_t axis, int exponent) {
  std::vector<int> exponents(nvars, 0);
  exponents[axis] = exponent;
  return Monomial(std::move(exponents));
}

}  // namespace

CorpusEntry make_fab(int a, int b, int d) {
  if (a < 2 || d < 2 || b <= d * a) {
    throw DomainError("family parameters require a >= 2, d >= 2, b > d*a");
  }
  RingPtr ring = standard_ring(d);
  const std::size_t n = static_cast<std::size_t>(d);
  Polynomial f = Polynomial::term(
      ring, Monomial(std::vector<int>(n, a)), Rational(1));
  for (std::size_t i = 0; i < n; ++i) {
    f = f + Polynomial::term(ring, axis_power(n, i, b), Rational(1));
  }
  CorpusEntry entry("fab-" + std::to_string(a) + "-" + std::to_string(b) +
                        "-d" + std::to_string(d),
                    f, CorpusSource::Fab);
  entry.expected.alpha = alpha_fab(a, b, d);
  entry.expected.ebs = d;
  entry.expected.nilpotence = NilpotenceOrder{d, "family"};
  return entry;
}

CorpusEntry make_brieskorn_pham(const std::vector<int>& exponents) {
  if (exponents.empty()) throw DomainError("empty exponent list");
  for (int a : exponents) {
    if (a < 2) throw DomainError("exponents must be at least 2");
  }
  const int d = static_cast<int>(exponents.size());
  RingPtr ring = standard_ring(d);
  Polynomial f = Polynomial::zero(ring);
  WeightVector weights;
  std::uint64_t mu = 1;
  std::string label = "bp";
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    f = f + Polynomial::term(ring, axis_power(exponents.size(), i, exponents[i]),
                             Rational(1));
    weights.weights.push_back(Rational(1) / Rational(exponents[i]));
    mu *= static_cast<std::uint64_t>(exponents[i] - 1);
    label += "-" + std::to_string(exponents[i]);
  }
  CorpusEntry entry(label, f, CorpusSource::BrieskornPham);
  entry.expected.alpha = alpha_quasihomogeneous(weights);
  entry.expected.weights = weights;
  entry.expected.milnor = MilnorNumber::finite(mu);
  entry.expected.ebs = 1;
  entry.expected.nilpotence = NilpotenceOrder{1, "semisimple-monodromy"};
  return entry;
}

CorpusEntry sum_disjoint(const CorpusEntry& left, const CorpusEntry& right) {
  const Polynomial& f = left.polynomial;
  const Polynomial& g = right.polynomial;
  for (const Polynomial* part : {&f, &g}) {
    if (part->is_zero() || !part->constant_term().is_zero() ||
        !singular_at_origin(*part)) {
      throw DomainError("join operands must be singular at the origin");
    }
  }

  // Fresh suffixed alphabet for the right block, first prefix that avoids
  // the left block's names.
  const std::vector<std::string>& left_names = f.ring()->variables();
  std::string prefix;
  for (const char* candidate : {"u", "v", "s", "t", "p", "q", "r"}) {
    bool clash = false;
    for (std::size_t j = 1; j <= g.variable_count() && !clash; ++j) {
      std::string name = candidate + std::to_string(j);
      clash = std::find(left_names.begin(), left_names.end(), name) !=
              left_names.end();
    }
    if (!clash) {
      prefix = candidate;
      break;
    }
  }
  if (prefix.empty()) throw DomainError("could not pick fresh variable names");

  std::vector<std::string> names = left_names;
  for (std::size_t j = 1; j <= g.variable_count(); ++j) {
    names.push_back(prefix + std::to_string(j));
  }
  RingPtr ring = Ring::make(std::move(names));
  const std::size_t n = ring->variable_count();
  const std::size_t offset = f.variable_count();

  auto embed = [&](const Polynomial& p, std::size_t shift) {
    Polynomial result = Polynomial::zero(ring);
    for (const auto& [mono, coeff] : p.terms()) {
      std::vector<int> exponents(n, 0);
      for (std::size_t i = 0; i < mono.size(); ++i) {
        exponents[i + shift] = mono.exponent(i);
      }
      result = result + Polynomial::term(ring, Monomial(std::move(exponents)), coeff);
    }
    return result;
  };

  CorpusEntry entry(left.label + "+" + right.label,
                    embed(f, 0) + embed(g, offset), CorpusSource::Join);

  if (left.expected.alpha && right.expected.alpha) {
    entry.expected.alpha =
        alpha_thom_sebastiani(*left.expected.alpha, *right.expected.alpha);
  }
  if (left.expected.ebs && right.expected.ebs) {
    if (*right.expected.ebs == 1) {
      entry.expected.ebs = *left.expected.ebs;
    } else if (*left.expected.ebs == 1) {
      entry.expected.ebs = *right.expected.ebs;
    }
  }
  if (left.expected.milnor && right.expected.milnor &&
      left.expected.milnor->is_finite() && right.expected.milnor->is_finite()) {
    entry.expected.milnor = MilnorNumber::finite(left.expected.milnor->value *
                                                 right.expected.milnor->value);
  }
  if (left.expected.weights && right.expected.weights) {
    WeightVector joined = *left.expected.weights;
    joined.weights.insert(joined.weights.end(),
                          right.expected.weights->weights.begin(),
                          right.expected.weights->weights.end());
    entry.expected.weights = std::move(joined);
  }
  return entry;
}

CorpusEntry random_isolated(std::uint64_t seed, int d, int max_degree,
                            const ResourceLimits& limits) {
  if (d != 2 && d != 3) throw DomainError("random entries support d in {2, 3}");
  if (max_degree < 2 || max_degree > 8) {
    throw DomainError("max_degree must lie in [2, 8]");
  }
  RingPtr ring = standard_ring(d);
  SplitMix64 stream(seed);
  constexpr int kMaxRetries = 64;

  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    const std::size_t term_count = static_cast<std::size_t>(d) + 2 +
                                   stream.next_below(3);
    Polynomial f = Polynomial::zero(ring);
    for (std::size_t t = 0; t < term_count; ++t) {
      int degree = 2 + static_cast<int>(stream.next_below(
                           static_cast<std::uint64_t>(max_degree - 1)));
      std::vector<int> exponents(static_cast<std::size_t>(d), 0);
      for (int unit = 0; unit < degree; ++unit) {
        ++exponents[stream.next_below(static_cast<std::uint64_t>(d))];
      }
      static const int kCoefficients[] = {-3, -2, -1, 1, 2, 3};
      Rational coeff(kCoefficients[stream.next_below(6)]);
      f = f + Polynomial::term(ring, Monomial(std::move(exponents)), coeff);
    }
    if (f.is_zero()) continue;
    bool finite = false;
    try {
      finite = staircase(jacobian_standard_basis(f, limits)).finite;
    } catch (const ResourceLimitError&) {
      continue;
    }
    if (!finite) continue;

    CorpusEntry entry("rand-d" + std::to_string(d) + "-s" + std::to_string(seed),
                      f, CorpusSource::Random);
    entry.seed = seed;
    entry.retries = attempt;
    return entry;
  }
  throw ResourceLimitError("random entry retry budget exhausted");
}

std::vector<CorpusEntry> paper_families_corpus() {
  std::vector<CorpusEntry> entries;
  entries.push_back(make_fab(2, 5, 2));
  entries.push_back(make_fab(3, 7, 2));
  entries.push_back(make_fab(2, 7, 3));
  entries.push_back(make_brieskorn_pham({2, 2}));
  entries.push_back(make_brieskorn_pham({2, 3}));
  entries.push_back(make_brieskorn_pham({3, 3}));
  entries.push_back(make_brieskorn_pham({3, 5}));
  entries.push_back(make_brieskorn_pham({2, 2, 2}));
  entries.push_back(make_brieskorn_pham({2, 3, 5}));
  entries.push_back(make_brieskorn_pham({2, 2, 2, 2}));
  entries.push_back(make_brieskorn_pham({2, 2, 2, 3}));
  entries.push_back(sum_disjoint(make_fab(2, 5, 2), make_brieskorn_pham({2, 2})));
  entries.push_back(
      sum_disjoint(make_brieskorn_pham({2, 3}), make_brieskorn_pham({2, 3})));
  return entries;
}

std::vector<CorpusEntry> stress_corpus(std::uint64_t seed, std::size_t count) {
  std::vector<CorpusEntry> entries;
  // Structured block, all with d in {2, 3}.
  entries.push_back(make_fab(2, 5, 2));
  entries.push_back(make_fab(3, 7, 2));
  entries.push_back(make_fab(2, 7, 3));
  entries.push_back(make_fab(2, 9, 2));
  entries.push_back(make_fab(4, 9, 2));
  entries.push_back(make_brieskorn_pham({2, 2}));
  entries.push_back(make_brieskorn_pham({2, 3}));
  entries.push_back(make_brieskorn_pham({3, 3}));
  entries.push_back(make_brieskorn_pham({3, 5}));
  entries.push_back(make_brieskorn_pham({2, 7}));
  entries.push_back(make_brieskorn_pham({2, 2, 2}));
  entries.push_back(make_brieskorn_pham({2, 2, 3}));
  entries.push_back(make_brieskorn_pham({2, 3, 5}));
  entries.push_back(make_brieskorn_pham({3, 3, 3}));
  entries.push_back(
      sum_disjoint(make_brieskorn_pham({2, 3}), make_brieskorn_pham({2})));
  if (entries.size() > count) {
    entries.erase(entries.begin() + static_cast<std::ptrdiff_t>(count),
                  entries.end());
    return entries;
  }

  SplitMix64 seeds(seed);
  while (entries.size() < count) {
    std::uint64_t entry_seed = seeds.next();
    int d = entries.size() % 3 == 2 ? 3 : 2;
    int max_degree = d == 2 ? 6 : 4;
    entries.push_back(random_isolated(entry_seed, d, max_degree));
  }
  return entries;
}

}  // namespace singlab
