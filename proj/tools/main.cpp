// Command-line front end: invariant computations and bound verification over
// single polynomials or corpora, with machine-readable reports.
//
// Exit codes: 0 all verdicts hold, 1 violation or expectation mismatch,
// 2 input error, 3 resource limit, 4 internal inconsistency.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "singlab/corpus_io.hpp"
#include "singlab/errors.hpp"
#include "singlab/families.hpp"
#include "singlab/parser.hpp"
#include "singlab/report.hpp"
#include "singlab/spectrum.hpp"
#include "singlab/standard_basis.hpp"

namespace {

using namespace singlab;

struct SharedArgs {
  std::string polynomial_text;
  std::vector<std::string> variables;
  std::string format = "json";
  std::string alpha_text;
  int nilpotence = 0;
  bool nilpotence_set = false;
  bool timings = false;
  ResourceLimits limits = ResourceLimits::from_env();
};

void add_io_flags(CLI::App* cmd, SharedArgs& args) {
  cmd->add_option("--format", args.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}));
  cmd->add_flag("--timings", args.timings, "Include per-stage timings");
  cmd->add_option("--max-pairs", args.limits.max_pairs, "Critical pair cap");
  cmd->add_option("--max-basis", args.limits.max_basis, "Basis size cap");
  cmd->add_option("--max-steps", args.limits.max_reduction_steps,
                  "Reduction step cap per normal form");
}

void add_poly_args(CLI::App* cmd, SharedArgs& args) {
  cmd->add_option("polynomial", args.polynomial_text, "Polynomial text")
      ->required();
  cmd->add_option("--vars", args.variables, "Variable names, comma separated")
      ->required()
      ->delimiter(',');
  add_io_flags(cmd, args);
}

Polynomial parse_input(const SharedArgs& args) {
  RingPtr ring = Ring::make(args.variables);
  return parse_polynomial(args.polynomial_text, ring);
}

AnalysisOptions analysis_options(const SharedArgs& args) {
  AnalysisOptions options;
  options.limits = args.limits;
  if (!args.alpha_text.empty()) {
    options.supplied_alpha = Rational::parse(args.alpha_text);
  }
  if (args.nilpotence_set) options.supplied_nilpotence = args.nilpotence;
  return options;
}

void emit(const nlohmann::json& value) { std::cout << value.dump(2) << '\n'; }

int run_value_command(const SharedArgs& args, const std::string& field) {
  Polynomial f = parse_input(args);
  nlohmann::json out;
  out["label"] = args.polynomial_text;
  if (field == "ebs") {
    out["ebs"] = briancon_skoda_exponent(f, args.limits);
  } else if (field == "milnor") {
    MilnorNumber mu = milnor_number(f, args.limits);
    if (mu.is_finite()) {
      out["milnor"] = mu.value;
    } else {
      out["milnor"] = "infinite";
    }
  } else if (field == "alpha") {
    AnalysisOptions options = analysis_options(args);
    InvariantReport report = analyze(f, args.polynomial_text, options);
    if (!report.alpha) {
      std::cerr << "error: alpha not derivable; pass --alpha p/q\n";
      return kExitInputError;
    }
    out["alpha"] = {{"value", report.alpha->value.str()},
                    {"provenance", provenance_label(report.alpha->provenance)}};
  }
  if (args.format == "table") {
    for (const auto& [key, value] : out.items()) {
      std::cout << key << ": "
                << (value.is_string() ? value.get<std::string>() : value.dump())
                << '\n';
    }
  } else {
    emit(out);
  }
  return kExitOk;
}

int run_spectrum(const SharedArgs& args, int degree_cap) {
  Polynomial f = parse_input(args);
  WeightDetection detection = is_weighted_homogeneous(f);
  if (!detection.weights) {
    std::cerr << "error: input is not quasi-homogeneous"
              << (detection.inconclusive ? " (weight search inconclusive)" : "")
              << '\n';
    return kExitInputError;
  }
  Spectrum spectrum = spectrum_qh(f, *detection.weights, args.limits);

  StandardBasis basis = jacobian_standard_basis(f, args.limits);
  Staircase st = staircase(basis);
  int cap = degree_cap > 0 ? degree_cap : default_degree_cap(f, st);
  VanishingCheck vanishing = check_theorem2_qh(f, *detection.weights, cap, args.limits);
  ShiftCheck shift = check_shift_consistency(spectrum, f, *detection.weights, args.limits);

  nlohmann::json out;
  out["label"] = args.polynomial_text;
  nlohmann::json weights = nlohmann::json::array();
  for (const Rational& w : detection.weights->weights) weights.push_back(w.str());
  out["weights"] = std::move(weights);
  nlohmann::json entries = nlohmann::json::array();
  for (const Rational& s : spectrum.entries) entries.push_back(s.str());
  out["spectrum"] = std::move(entries);
  out["mu"] = spectrum.mu();
  out["minimal_spectral_number"] = minimal_spectral_number(spectrum).str();
  out["vanishing_check"] = {{"passed", vanishing.passed},
                            {"threshold", vanishing.threshold.str()},
                            {"degree_cap", cap},
                            {"checked", vanishing.checked}};
  out["shift_check"] = {{"passed", shift.passed}};
  if (args.format == "table") {
    std::cout << "spectrum:";
    for (const Rational& s : spectrum.entries) std::cout << ' ' << s.str();
    std::cout << "\nmu: " << spectrum.mu()
              << "\nvanishing_check: " << (vanishing.passed ? "pass" : "FAIL")
              << "\nshift_check: " << (shift.passed ? "pass" : "FAIL") << '\n';
  } else {
    emit(out);
  }
  return vanishing.passed && shift.passed ? kExitOk : kExitViolation;
}

int run_verify(const SharedArgs& args) {
  Polynomial f = parse_input(args);
  AnalysisOptions options = analysis_options(args);
  InvariantReport report = analyze(f, args.polynomial_text, options);
  if (args.format == "table") {
    std::cout << report_to_table(report);
  } else {
    emit(report_to_json(report, args.timings));
  }
  return report.bounds.all_hold() ? kExitOk : kExitViolation;
}

std::vector<CorpusEntry> load_corpus(const std::string& path, std::uint64_t seed) {
  if (path == "@paper_families") return paper_families_corpus();
  if (path == "@stress50") return stress_corpus(seed, 50);
  return read_corpus_file(path);
}

int run_corpus_command(const SharedArgs& args, const std::string& path,
                       std::uint64_t seed, bool dump, const std::string& out_path) {
  std::vector<CorpusEntry> entries = load_corpus(path, seed);
  if (dump) {
    if (out_path.empty()) {
      write_corpus(std::cout, entries);
    } else {
      std::ofstream out(out_path);
      if (!out) throw DomainError("cannot open output file '" + out_path + "'");
      write_corpus(out, entries);
    }
    return kExitOk;
  }
  AnalysisOptions options = analysis_options(args);
  CorpusRunResult result = run_corpus(entries, options);
  if (args.format == "table") {
    std::cout << corpus_result_to_table(result);
  } else {
    emit(corpus_result_to_json(result, args.timings));
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hypersurface singularity invariants at the origin"};
  app.require_subcommand(1);

  SharedArgs args;

  CLI::App* ebs = app.add_subcommand("ebs", "Briancon-Skoda exponent");
  add_poly_args(ebs, args);

  CLI::App* milnor = app.add_subcommand("milnor", "Milnor number");
  add_poly_args(milnor, args);

  CLI::App* alpha = app.add_subcommand("alpha", "Minimal exponent");
  add_poly_args(alpha, args);
  alpha->add_option("--alpha", args.alpha_text, "Supplied minimal exponent p/q");

  int degree_cap = 0;
  CLI::App* spectrum =
      app.add_subcommand("spectrum", "Spectral numbers and filtration checks");
  add_poly_args(spectrum, args);
  spectrum->add_option("--degree-cap", degree_cap,
                       "Monomial degree cap for the vanishing check");

  CLI::App* verify = app.add_subcommand("verify", "Full invariant report");
  add_poly_args(verify, args);
  verify->add_option("--alpha", args.alpha_text, "Supplied minimal exponent p/q");
  verify
      ->add_option("--no", args.nilpotence, "Supplied nilpotence order")
      ->each([&args](const std::string&) { args.nilpotence_set = true; });

  std::string corpus_path;
  std::uint64_t seed = 1;
  bool dump = false;
  std::string out_path;
  CLI::App* corpus = app.add_subcommand("corpus", "Run or dump a corpus");
  corpus->add_option("path", corpus_path,
                     "Corpus file, or @paper_families / @stress50")
      ->required();
  corpus->add_option("--seed", seed, "Seed for generated corpora");
  corpus->add_flag("--dump", dump, "Write the corpus records instead of running");
  corpus->add_option("--out", out_path, "Dump destination file");
  add_io_flags(corpus, args);

  CLI11_PARSE(app, argc, argv);

  try {
    if (ebs->parsed()) return run_value_command(args, "ebs");
    if (milnor->parsed()) return run_value_command(args, "milnor");
    if (alpha->parsed()) return run_value_command(args, "alpha");
    if (spectrum->parsed()) return run_spectrum(args, degree_cap);
    if (verify->parsed()) return run_verify(args);
    if (corpus->parsed()) {
      return run_corpus_command(args, corpus_path, seed, dump, out_path);
    }
  } catch (const ResourceLimitError& error) {
    std::cerr << "resource limit: " << error.what() << '\n';
    return kExitResourceLimit;
  } catch (const InternalError& error) {
    std::cerr << "internal error: " << error.what() << '\n';
    return kExitInternalError;
  } catch (const Error& error) {
    std::cerr << "error: " << error.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}
