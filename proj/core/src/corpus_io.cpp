#include "singlab/corpus_io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

#include "singlab/errors.hpp"
#include "singlab/parser.hpp"

namespace singlab {

namespace {

using nlohmann::json;

AlphaProvenance provenance_from_label(const std::string& label) {
  if (label == "quasi-homogeneous") return AlphaProvenance::QuasiHomogeneous;
  if (label == "f_ab") return AlphaProvenance::FabFamily;
  if (label == "thom-sebastiani") return AlphaProvenance::ThomSebastiani;
  if (label == "supplied") return AlphaProvenance::Supplied;
  throw DomainError("unknown alpha provenance '" + label + "'");
}

CorpusSource source_from_label(const std::string& label) {
  if (label == "fab") return CorpusSource::Fab;
  if (label == "brieskorn-pham") return CorpusSource::BrieskornPham;
  if (label == "join") return CorpusSource::Join;
  if (label == "random") return CorpusSource::Random;
  throw DomainError("unknown corpus source '" + label + "'");
}

CorpusEntry entry_from_json(const json& record, std::size_t line_number) {
  auto fail = [line_number](const std::string& what) -> ParseError {
    return ParseError("corpus line " + std::to_string(line_number) + ": " + what,
                      line_number);
  };
  if (!record.is_object()) throw fail("record is not an object");
  if (!record.contains("label") || !record.contains("vars") ||
      !record.contains("poly")) {
    throw fail("record needs label, vars, poly");
  }

  std::vector<std::string> vars =
      record.at("vars").get<std::vector<std::string>>();
  RingPtr ring = Ring::make(std::move(vars));
  CorpusEntry entry(
      record.at("label").get<std::string>(),
      parse_polynomial(record.at("poly").get<std::string>(), ring),
      CorpusSource::Random);

  if (record.contains("source")) {
    entry.source = source_from_label(record.at("source").get<std::string>());
  }
  if (record.contains("seed")) {
    entry.seed = record.at("seed").get<std::uint64_t>();
  }
  if (record.contains("retries")) {
    entry.retries = record.at("retries").get<int>();
  }

  if (record.contains("expect")) {
    const json& expect = record.at("expect");
    if (expect.contains("ebs")) entry.expected.ebs = expect.at("ebs").get<int>();
    if (expect.contains("mu")) {
      const json& mu = expect.at("mu");
      entry.expected.milnor =
          mu.is_string() ? MilnorNumber::infinite()
                         : MilnorNumber::finite(mu.get<std::uint64_t>());
    }
    if (expect.contains("alpha")) {
      MinimalExponent alpha{
          Rational::parse(expect.at("alpha").get<std::string>()),
          AlphaProvenance::Supplied};
      if (expect.contains("alpha_provenance")) {
        alpha.provenance = provenance_from_label(
            expect.at("alpha_provenance").get<std::string>());
      }
      entry.expected.alpha = std::move(alpha);
    }
    if (expect.contains("weights")) {
      WeightVector weights;
      for (const json& w : expect.at("weights")) {
        weights.weights.push_back(Rational::parse(w.get<std::string>()));
      }
      entry.expected.weights = std::move(weights);
    }
  }
  if (record.contains("no")) {
    const json& no = record.at("no");
    entry.expected.nilpotence = NilpotenceOrder{
        no.at("value").get<int>(), no.at("provenance").get<std::string>()};
  }
  return entry;
}

json entry_to_json(const CorpusEntry& entry) {
  json record;
  record["label"] = entry.label;
  record["vars"] = entry.polynomial.ring()->variables();
  record["poly"] = to_string(entry.polynomial);
  record["source"] = source_label(entry.source);
  if (entry.seed) record["seed"] = *entry.seed;
  if (entry.retries != 0) record["retries"] = entry.retries;

  json expect = json::object();
  if (entry.expected.ebs) expect["ebs"] = *entry.expected.ebs;
  if (entry.expected.milnor) {
    if (entry.expected.milnor->is_finite()) {
      expect["mu"] = entry.expected.milnor->value;
    } else {
      expect["mu"] = "infinite";
    }
  }
  if (entry.expected.alpha) {
    expect["alpha"] = entry.expected.alpha->value.str();
    expect["alpha_provenance"] = provenance_label(entry.expected.alpha->provenance);
  }
  if (entry.expected.weights) {
    json weights = json::array();
    for (const Rational& w : entry.expected.weights->weights) {
      weights.push_back(w.str());
    }
    expect["weights"] = std::move(weights);
  }
  if (!expect.empty()) record["expect"] = std::move(expect);

  if (entry.expected.nilpotence) {
    record["no"] = {{"value", entry.expected.nilpotence->value},
                    {"provenance", entry.expected.nilpotence->provenance}};
  }
  return record;
}

}  // namespace

std::vector<CorpusEntry> read_corpus(std::istream& input) {
  std::vector<CorpusEntry> entries;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(input, line)) {
    ++line_number;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    json record;
    try {
      record = json::parse(line);
    } catch (const json::exception& error) {
      throw ParseError("corpus line " + std::to_string(line_number) + ": " +
                           error.what(),
                       line_number);
    }
    entries.push_back(entry_from_json(record, line_number));
  }
  return entries;
}

std::vector<CorpusEntry> read_corpus_file(const std::string& path) {
  std::ifstream input(path);
  if (!input) throw DomainError("cannot open corpus file '" + path + "'");
  return read_corpus(input);
}

void write_corpus(std::ostream& output, const std::vector<CorpusEntry>& entries) {
  for (const CorpusEntry& entry : entries) {
    output << entry_to_json(entry).dump() << '\n';
  }
}

std::string corpus_to_text(const std::vector<CorpusEntry>& entries) {
  std::ostringstream out;
  write_corpus(out, entries);
  return out.str();
}

}  // namespace singlab
