#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "singlab/families.hpp"

namespace singlab {

// Corpus files are JSON Lines: one object per entry, blank lines and lines
// starting with '#' ignored. Fields: label, vars, poly, optional expect
// {ebs, mu, alpha, alpha_provenance, weights}, optional no {value,
// provenance}, optional source, seed, retries. Rationals are strings,
// an infinite Milnor number is the string "infinite". Writing is
// deterministic: sorted keys, one line per entry, bit-compatible across
// runs.
std::vector<CorpusEntry> read_corpus(std::istream& input);
std::vector<CorpusEntry> read_corpus_file(const std::string& path);

void write_corpus(std::ostream& output, const std::vector<CorpusEntry>& entries);
std::string corpus_to_text(const std::vector<CorpusEntry>& entries);

}  // namespace singlab
