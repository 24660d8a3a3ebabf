#pragma once

#include <string>
#include <string_view>

#include "singlab/polynomial.hpp"
#include "singlab/ring.hpp"

namespace singlab {

// Grammar: terms joined by '+'/'-'; a term is an optional rational
// coefficient `p` or `p/q` (optionally parenthesized) followed by
// '*'-separated powers `var^k` (k omitted means 1). Whitespace is
// insignificant; variables match [a-zA-Z][a-zA-Z0-9_]*.
// Throws ParseError with the byte offset of the offending character, or on
// an identifier missing from the ring.
Polynomial parse_polynomial(std::string_view text, RingPtr ring);

// Canonical rendering: terms in descending degree-reverse-lexicographic
// order, fractional coefficients parenthesized next to powers. Parsing the
// output reproduces the polynomial exactly.
std::string to_string(const Polynomial& polynomial);

}  // namespace singlab
