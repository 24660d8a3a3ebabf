#include "singlab/report.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "singlab/errors.hpp"
#include "singlab/parser.hpp"
#include "singlab/standard_basis.hpp"

namespace singlab {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

std::optional<FabParameters> match_fab(const Polynomial& f) {
  const std::size_t n = f.variable_count();
  if (n < 2 || f.term_count() != n + 1) return std::nullopt;

  std::optional<int> a;
  std::optional<int> b;
  std::vector<bool> axis_seen(n, false);
  for (const auto& [mono, coeff] : f.terms()) {
    if (!coeff.is_one()) return std::nullopt;
    std::size_t support = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mono.exponent(i) != 0) ++support;
    }
    if (support == n) {
      int first = mono.exponent(0);
      for (std::size_t i = 1; i < n; ++i) {
        if (mono.exponent(i) != first) return std::nullopt;
      }
      if (a) return std::nullopt;
      a = first;
    } else if (support == 1) {
      std::size_t axis = 0;
      while (mono.exponent(axis) == 0) ++axis;
      if (axis_seen[axis]) return std::nullopt;
      axis_seen[axis] = true;
      if (b && *b != mono.exponent(axis)) return std::nullopt;
      b = mono.exponent(axis);
    } else {
      return std::nullopt;
    }
  }
  if (!a || !b) return std::nullopt;
  if (std::find(axis_seen.begin(), axis_seen.end(), false) != axis_seen.end()) {
    return std::nullopt;
  }
  const int d = static_cast<int>(n);
  if (*a < 2 || d < 2 || *b <= d * *a) return std::nullopt;
  return FabParameters{*a, *b, d};
}

InvariantReport analyze(const Polynomial& f, const std::string& label,
                        const AnalysisOptions& options) {
  if (!f.constant_term().is_zero()) {
    throw DomainError("input does not vanish at the origin");
  }
  if (!singular_at_origin(f)) {
    throw DomainError("input is nonsingular at the origin");
  }

  InvariantReport report;
  report.label = label;
  report.dimension = static_cast<int>(f.variable_count());

  auto start = Clock::now();
  StandardBasis jacobian_basis = jacobian_standard_basis(f, options.limits);
  report.timings_ms["standard_basis"] = elapsed_ms(start);

  start = Clock::now();
  Staircase jacobian_staircase = staircase(jacobian_basis);
  MilnorNumber mu = milnor_number_from(jacobian_staircase);
  report.milnor = mu;
  report.timings_ms["staircase"] = elapsed_ms(start);

  SingularityProfile profile;
  profile.dimension = report.dimension;
  profile.singular_at_origin = true;
  profile.isolated = mu.is_finite() ? Isolated::Yes : Isolated::No;
  profile.milnor = mu;

  start = Clock::now();
  report.ebs = briancon_skoda_exponent(f, jacobian_basis, options.limits);
  report.timings_ms["ebs"] = elapsed_ms(start);

  start = Clock::now();
  WeightDetection detection = is_weighted_homogeneous(f);
  if (detection.weights) report.weights = detection.weights;
  if (detection.inconclusive) report.flags.push_back("weight-detection-inconclusive");

  // Alpha resolution: derived values win over a supplied one.
  if (detection.weights && profile.isolated == Isolated::Yes) {
    report.alpha = alpha_quasihomogeneous(*detection.weights);
  } else if (auto fab = match_fab(f)) {
    report.alpha = alpha_fab(fab->a, fab->b, fab->d);
  } else if (options.supplied_alpha) {
    if (options.supplied_alpha->sign() <= 0) {
      throw DomainError("supplied alpha must be positive");
    }
    report.alpha = MinimalExponent{*options.supplied_alpha, AlphaProvenance::Supplied};
  }
  if (options.supplied_alpha && report.alpha &&
      report.alpha->provenance != AlphaProvenance::Supplied &&
      !(report.alpha->value == *options.supplied_alpha)) {
    report.flags.push_back("supplied-alpha-differs-from-derived");
  }
  report.timings_ms["alpha"] = elapsed_ms(start);

  if (options.supplied_nilpotence) {
    report.nilpotence = NilpotenceOrder{*options.supplied_nilpotence, "supplied"};
  }

  start = Clock::now();
  std::optional<int> no_value;
  if (report.nilpotence) no_value = report.nilpotence->value;
  report.bounds = evaluate_bounds(profile, *report.ebs, report.alpha, no_value);
  report.timings_ms["bounds"] = elapsed_ms(start);
  return report;
}

nlohmann::json report_to_json(const InvariantReport& report, bool include_timings) {
  nlohmann::json out;
  out["label"] = report.label;
  out["dimension"] = report.dimension;
  if (report.ebs) out["ebs"] = *report.ebs;
  if (report.milnor) {
    if (report.milnor->is_finite()) {
      out["milnor"] = report.milnor->value;
    } else {
      out["milnor"] = "infinite";
    }
  }
  if (report.weights) {
    nlohmann::json weights = nlohmann::json::array();
    for (const Rational& w : report.weights->weights) weights.push_back(w.str());
    out["weights"] = std::move(weights);
  }
  if (report.alpha) {
    out["alpha"] = {{"value", report.alpha->value.str()},
                    {"provenance", provenance_label(report.alpha->provenance)}};
  }
  if (report.nilpotence) {
    out["no"] = {{"value", report.nilpotence->value},
                 {"provenance", report.nilpotence->provenance}};
  }
  nlohmann::json verdicts = nlohmann::json::array();
  for (const BoundVerdict& v : report.bounds.verdicts) {
    verdicts.push_back({{"id", bound_id_label(v.id)},
                        {"lhs", v.lhs.str()},
                        {"rhs", v.rhs.str()},
                        {"holds", v.holds},
                        {"tight", v.tight}});
  }
  out["verdicts"] = std::move(verdicts);
  nlohmann::json skipped = nlohmann::json::array();
  for (const SkippedBound& s : report.bounds.skipped) {
    skipped.push_back({{"id", bound_id_label(s.id)}, {"reason", s.reason}});
  }
  out["skipped"] = std::move(skipped);
  out["flags"] = report.flags;
  if (include_timings) out["timing_ms"] = report.timings_ms;
  return out;
}

std::string report_to_table(const InvariantReport& report) {
  std::ostringstream out;
  out << "label:     " << report.label << '\n';
  out << "dimension: " << report.dimension << '\n';
  if (report.ebs) out << "ebs:       " << *report.ebs << '\n';
  if (report.milnor) out << "milnor:    " << report.milnor->str() << '\n';
  if (report.weights) {
    out << "weights:   ";
    for (std::size_t i = 0; i < report.weights->weights.size(); ++i) {
      if (i != 0) out << ' ';
      out << report.weights->weights[i].str();
    }
    out << '\n';
  }
  if (report.alpha) {
    out << "alpha:     " << report.alpha->value.str() << " ["
        << provenance_label(report.alpha->provenance) << "]\n";
  }
  if (report.nilpotence) {
    out << "no:        " << report.nilpotence->value << " ["
        << report.nilpotence->provenance << "]\n";
  }
  for (const BoundVerdict& v : report.bounds.verdicts) {
    out << "bound " << bound_id_label(v.id) << ": " << v.lhs.str()
        << " <= " << v.rhs.str() << "  " << (v.holds ? "pass" : "FAIL")
        << (v.tight ? " (tight)" : "") << '\n';
  }
  for (const SkippedBound& s : report.bounds.skipped) {
    out << "bound " << bound_id_label(s.id) << ": skipped (" << s.reason << ")\n";
  }
  for (const std::string& flag : report.flags) {
    out << "flag:      " << flag << '\n';
  }
  return out.str();
}

namespace {

void compare_expected(const CorpusEntry& entry, const InvariantReport& report,
                      std::vector<ExpectationMismatch>& mismatches) {
  const ExpectedInvariants& expected = entry.expected;
  auto mismatch = [&](const std::string& field, const std::string& want,
                      const std::string& got) {
    mismatches.push_back({entry.label, field, want, got});
  };

  if (expected.ebs && report.ebs && *expected.ebs != *report.ebs) {
    mismatch("ebs", std::to_string(*expected.ebs), std::to_string(*report.ebs));
  }
  if (expected.milnor && report.milnor && !(*expected.milnor == *report.milnor)) {
    mismatch("mu", expected.milnor->str(), report.milnor->str());
  }
  if (expected.alpha) {
    if (!report.alpha) {
      mismatch("alpha", expected.alpha->value.str(), "absent");
    } else if (!(expected.alpha->value == report.alpha->value)) {
      mismatch("alpha", expected.alpha->value.str(), report.alpha->value.str());
    }
  }
  if (expected.weights) {
    if (!report.weights) {
      mismatch("weights", "present", "absent");
    } else if (!(*expected.weights == *report.weights)) {
      std::ostringstream want;
      std::ostringstream got;
      for (const Rational& w : expected.weights->weights) want << w.str() << ' ';
      for (const Rational& w : report.weights->weights) got << w.str() << ' ';
      mismatch("weights", want.str(), got.str());
    }
  }
}

}  // namespace

CorpusRunResult run_corpus(const std::vector<CorpusEntry>& entries,
                           const AnalysisOptions& options) {
  CorpusRunResult result;
  bool any_input_error = false;
  bool any_resource_limit = false;

  for (const CorpusEntry& entry : entries) {
    EntryOutcome outcome;
    outcome.label = entry.label;
    AnalysisOptions entry_options = options;
    if (entry.expected.nilpotence && !entry_options.supplied_nilpotence) {
      entry_options.supplied_nilpotence = entry.expected.nilpotence->value;
    }
    if (entry.expected.alpha && !entry_options.supplied_alpha) {
      entry_options.supplied_alpha = entry.expected.alpha->value;
    }
    try {
      InvariantReport report = analyze(entry.polynomial, entry.label, entry_options);
      if (entry.expected.nilpotence && report.nilpotence) {
        report.nilpotence->provenance = entry.expected.nilpotence->provenance;
      }
      // A value injected from the corpus record keeps the record's provenance.
      if (report.alpha && report.alpha->provenance == AlphaProvenance::Supplied &&
          entry.expected.alpha &&
          entry.expected.alpha->value == report.alpha->value) {
        report.alpha->provenance = entry.expected.alpha->provenance;
      }
      compare_expected(entry, report, result.mismatches);
      outcome.report = std::move(report);
    } catch (const ResourceLimitError& error) {
      outcome.error = error.what();
      outcome.resource_limited = true;
      any_resource_limit = true;
    } catch (const Error& error) {
      outcome.error = error.what();
      any_input_error = true;
    }
    result.outcomes.push_back(std::move(outcome));
  }

  bool any_violation = !result.mismatches.empty();
  for (const EntryOutcome& outcome : result.outcomes) {
    if (!outcome.report) continue;
    for (const BoundVerdict& v : outcome.report->bounds.verdicts) {
      BoundTally& tally = result.summary[bound_id_label(v.id)];
      if (v.holds) {
        ++tally.pass;
        if (v.tight) ++tally.tight;
      } else {
        ++tally.fail;
        any_violation = true;
      }
    }
    for (const SkippedBound& s : outcome.report->bounds.skipped) {
      ++result.summary[bound_id_label(s.id)].skipped;
    }
  }

  if (any_violation) {
    result.exit_code = kExitViolation;
  } else if (any_input_error) {
    result.exit_code = kExitInputError;
  } else if (any_resource_limit) {
    result.exit_code = kExitResourceLimit;
  } else {
    result.exit_code = kExitOk;
  }
  return result;
}

nlohmann::json corpus_result_to_json(const CorpusRunResult& result,
                                     bool include_timings) {
  nlohmann::json out;
  nlohmann::json entries = nlohmann::json::array();
  for (const EntryOutcome& outcome : result.outcomes) {
    if (outcome.report) {
      entries.push_back(report_to_json(*outcome.report, include_timings));
    } else {
      entries.push_back({{"label", outcome.label},
                         {"error", outcome.error.value_or("unknown")},
                         {"resource_limited", outcome.resource_limited}});
    }
  }
  out["entries"] = std::move(entries);

  nlohmann::json mismatches = nlohmann::json::array();
  for (const ExpectationMismatch& m : result.mismatches) {
    mismatches.push_back({{"label", m.label},
                          {"field", m.field},
                          {"expected", m.expected},
                          {"actual", m.actual}});
  }
  out["mismatches"] = std::move(mismatches);

  nlohmann::json summary;
  for (const auto& [id, tally] : result.summary) {
    summary[id] = {{"pass", tally.pass},
                   {"fail", tally.fail},
                   {"tight", tally.tight},
                   {"skipped", tally.skipped}};
  }
  out["summary"] = std::move(summary);
  out["exit_code"] = result.exit_code;
  return out;
}

std::string corpus_result_to_table(const CorpusRunResult& result) {
  std::ostringstream out;
  for (const EntryOutcome& outcome : result.outcomes) {
    if (outcome.report) {
      const InvariantReport& r = *outcome.report;
      out << r.label << ": ebs=" << (r.ebs ? std::to_string(*r.ebs) : "?")
          << " mu=" << (r.milnor ? r.milnor->str() : "?");
      if (r.alpha) out << " alpha=" << r.alpha->value.str();
      int failed = 0;
      for (const BoundVerdict& v : r.bounds.verdicts) {
        if (!v.holds) ++failed;
      }
      out << (failed == 0 ? " ok" : " FAIL") << '\n';
    } else {
      out << outcome.label << ": error: " << outcome.error.value_or("unknown")
          << '\n';
    }
  }
  for (const ExpectationMismatch& m : result.mismatches) {
    out << "mismatch " << m.label << "." << m.field << ": expected " << m.expected
        << ", got " << m.actual << '\n';
  }
  for (const auto& [id, tally] : result.summary) {
    out << "bound " << id << ": pass=" << tally.pass << " fail=" << tally.fail
        << " tight=" << tally.tight << " skipped=" << tally.skipped << '\n';
  }
  out << "exit: " << result.exit_code << '\n';
  return out.str();
}

}  // namespace singlab
