#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "singlab/families.hpp"
#include "singlab/jacobian.hpp"
#include "singlab/limits.hpp"
#include "singlab/minimal_exponent.hpp"
#include "singlab/polynomial.hpp"

namespace singlab {

// Exit-code contract shared by every command: 0 all verdicts hold, 1 a
// verdict failed or an expected value mismatched, 2 input error, 3 resource
// limit. 4 is reserved for internal-inconsistency errors (bugs).
enum ExitCode {
  kExitOk = 0,
  kExitViolation = 1,
  kExitInputError = 2,
  kExitResourceLimit = 3,
  kExitInternalError = 4,
};

struct InvariantReport {
  std::string label;
  int dimension = 0;
  std::optional<int> ebs;
  std::optional<MilnorNumber> milnor;
  std::optional<WeightVector> weights;
  std::optional<MinimalExponent> alpha;
  std::optional<NilpotenceOrder> nilpotence;
  BoundEvaluation bounds;
  std::vector<std::string> flags;
  std::map<std::string, double> timings_ms;  // excluded from comparisons
};

struct AnalysisOptions {
  ResourceLimits limits;
  std::optional<Rational> supplied_alpha;
  std::optional<int> supplied_nilpotence;
};

// Full pipeline over one polynomial: profile, Briancon-Skoda exponent,
// weight detection, alpha resolution (quasi-homogeneous weights when the
// singularity is isolated, else exact structural recognition of the
// product-plus-powers family, else the supplied value), bound verdicts.
// Requires f(0) = 0 and a singularity at the origin.
InvariantReport analyze(const Polynomial& f, const std::string& label,
                        const AnalysisOptions& options = {});

// Exact structural match of prod x_i^a + sum x_i^b (unit coefficients,
// variable permutations allowed). Returns (a, b, d) on match.
struct FabParameters {
  int a = 0;
  int b = 0;
  int d = 0;
};
std::optional<FabParameters> match_fab(const Polynomial& f);

nlohmann::json report_to_json(const InvariantReport& report,
                              bool include_timings = false);
std::string report_to_table(const InvariantReport& report);

// Corpus run: per-entry reports in file order, expected-value comparison,
// per-inequality summary. Entry errors are recorded and do not abort the
// run.
struct ExpectationMismatch {
  std::string label;
  std::string field;
  std::string expected;
  std::string actual;
};

struct BoundTally {
  int pass = 0;
  int fail = 0;
  int tight = 0;
  int skipped = 0;
};

struct EntryOutcome {
  std::string label;
  std::optional<InvariantReport> report;
  std::optional<std::string> error;       // message when the entry failed
  bool resource_limited = false;
};

struct CorpusRunResult {
  std::vector<EntryOutcome> outcomes;
  std::vector<ExpectationMismatch> mismatches;
  std::map<std::string, BoundTally> summary;  // keyed by bound id label
  int exit_code = kExitOk;
};

CorpusRunResult run_corpus(const std::vector<CorpusEntry>& entries,
                           const AnalysisOptions& options = {});

nlohmann::json corpus_result_to_json(const CorpusRunResult& result,
                                     bool include_timings = false);
std::string corpus_result_to_table(const CorpusRunResult& result);

}  // namespace singlab
