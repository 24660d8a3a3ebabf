#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "singlab/jacobian.hpp"
#include "singlab/limits.hpp"
#include "singlab/minimal_exponent.hpp"
#include "singlab/polynomial.hpp"

namespace singlab {

enum class CorpusSource { Fab, BrieskornPham, Join, Random };
std::string source_label(CorpusSource source);

// Externally supplied largest-Jordan-block size of the monodromy logarithm.
// Never computed here; the provenance string records where it came from.
struct NilpotenceOrder {
  int value = 0;
  std::string provenance;

  friend bool operator==(const NilpotenceOrder& a, const NilpotenceOrder& b) {
    return a.value == b.value && a.provenance == b.provenance;
  }
};

struct ExpectedInvariants {
  std::optional<int> ebs;
  std::optional<MilnorNumber> milnor;
  std::optional<MinimalExponent> alpha;
  std::optional<WeightVector> weights;
  std::optional<NilpotenceOrder> nilpotence;
};

struct CorpusEntry {
  CorpusEntry(std::string label, Polynomial polynomial, CorpusSource source)
      : label(std::move(label)),
        polynomial(std::move(polynomial)),
        source(source) {}

  std::string label;
  Polynomial polynomial;
  ExpectedInvariants expected;
  CorpusSource source;
  std::optional<std::uint64_t> seed;
  int retries = 0;
};

// prod_{i<=d} x_i^a + sum_{i<=d} x_i^b with a >= 2, b > d*a, d >= 2.
// Expected: alpha = 1/a, nilpotence order d, Briancon-Skoda exponent d.
CorpusEntry make_fab(int a, int b, int d);

// sum x_i^{a_i} with every a_i >= 2. Expected: weights (1/a_i),
// mu = prod(a_i - 1), exponent 1, nilpotence order 1 (semisimple monodromy,
// classical fact for this class).
CorpusEntry make_brieskorn_pham(const std::vector<int>& exponents);

// Sum on the disjoint union of variables. The left operand keeps its
// variable names, the right operand is renamed to a fresh suffixed alphabet.
// Both operands must vanish and be singular at the origin.
CorpusEntry sum_disjoint(const CorpusEntry& left, const CorpusEntry& right);

// Deterministic-from-seed polynomial in the square of the maximal ideal
// with finite Milnor number; retries within the same stream until the
// staircase is finite. d in {2, 3}, max_degree <= 8.
CorpusEntry random_isolated(std::uint64_t seed, int d, int max_degree,
                            const ResourceLimits& limits = ResourceLimits());

// Bundled corpora.
std::vector<CorpusEntry> paper_families_corpus();
std::vector<CorpusEntry> stress_corpus(std::uint64_t seed, std::size_t count);

// Splittable counter-based generator; identical streams on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  std::uint64_t next_below(std::uint64_t bound);  // bound > 0

 private:
  std::uint64_t state_;
};

}  // namespace singlab
