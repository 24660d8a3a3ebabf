#include "singlab/parser.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "singlab/errors.hpp"
#include "singlab/monomial_order.hpp"

namespace singlab {

namespace {

class Parser {
 public:
  Parser(std::string_view text, RingPtr ring)
      : text_(text), ring_(std::move(ring)) {}

  Polynomial run() {
    Polynomial result = Polynomial::zero(ring_);
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = take() == '-';
    result = result + parse_term(negative);
    skip_ws();
    while (!at_end()) {
      char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      take();
      result = result + parse_term(op == '-');
      skip_ws();
    }
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char take() { return text_[pos_++]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, pos_);
  }

  Integer parse_natural() {
    skip_ws();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      fail("expected a number");
    }
    std::string digits;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      digits += take();
    }
    return Integer(digits);
  }

  std::string parse_identifier() {
    skip_ws();
    if (at_end() || !(std::isalpha(static_cast<unsigned char>(peek())))) {
      fail("expected an identifier");
    }
    std::string name;
    name += take();
    while (!at_end()) {
      char ch = peek();
      if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_') {
        name += take();
      } else {
        break;
      }
    }
    return name;
  }

  // `p`, `p/q`, or the parenthesized forms with an optional sign inside.
  Rational parse_coefficient() {
    skip_ws();
    if (!at_end() && peek() == '(') {
      take();
      skip_ws();
      bool negative = false;
      if (!at_end() && (peek() == '-' || peek() == '+')) negative = take() == '-';
      Rational value = parse_unsigned_rational();
      skip_ws();
      if (at_end() || peek() != ')') fail("expected ')'");
      take();
      return negative ? -value : value;
    }
    return parse_unsigned_rational();
  }

  Rational parse_unsigned_rational() {
    Integer numerator = parse_natural();
    skip_ws();
    if (!at_end() && peek() == '/') {
      take();
      std::size_t denom_pos = pos_;
      Integer denominator = parse_natural();
      if (denominator == 0) throw ParseError("zero denominator", denom_pos);
      return Rational(numerator, denominator);
    }
    return Rational(numerator);
  }

  // power := var ['^' nat]
  void parse_power(std::vector<int>& exponents) {
    std::size_t name_pos = pos_;
    skip_ws();
    name_pos = pos_;
    std::string name = parse_identifier();
    auto index = ring_->index_of(name);
    if (!index) throw ParseError("unknown variable '" + name + "'", name_pos);
    int exponent = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      take();
      std::size_t exp_pos = pos_;
      Integer value = parse_natural();
      if (value > 1000000) throw ParseError("exponent too large", exp_pos);
      exponent = static_cast<int>(value);
    }
    long long sum = static_cast<long long>(exponents[*index]) + exponent;
    if (sum > 1000000) throw ParseError("exponent too large", name_pos);
    exponents[*index] = static_cast<int>(sum);
  }

  Polynomial parse_term(bool negative) {
    skip_ws();
    if (at_end()) fail("expected a term");
    Rational coefficient(1);
    bool saw_coefficient = false;
    char first = peek();
    if (std::isdigit(static_cast<unsigned char>(first)) || first == '(') {
      coefficient = parse_coefficient();
      saw_coefficient = true;
    }
    std::vector<int> exponents(ring_->variable_count(), 0);
    bool saw_power = false;
    if (saw_coefficient) {
      skip_ws();
      if (!at_end() && peek() == '*') {
        take();
        parse_power(exponents);
        saw_power = true;
      }
    } else {
      parse_power(exponents);
      saw_power = true;
    }
    while (true) {
      skip_ws();
      if (at_end() || peek() != '*') break;
      take();
      parse_power(exponents);
    }
    if (!saw_coefficient && !saw_power) fail("expected a term");
    if (negative) coefficient = -coefficient;
    return Polynomial::term(ring_, Monomial(std::move(exponents)),
                            std::move(coefficient));
  }

  std::string_view text_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

void print_power(std::ostream& os, const Ring& ring, const Monomial& monomial,
                 bool leading_star) {
  bool first = !leading_star;
  for (std::size_t i = 0; i < monomial.size(); ++i) {
    int e = monomial.exponent(i);
    if (e == 0) continue;
    if (!first) os << '*';
    first = false;
    os << ring.variable(i);
    if (e != 1) os << '^' << e;
  }
}

void print_term(std::ostream& os, const Ring& ring, const Monomial& monomial,
                const Rational& coefficient) {
  Rational magnitude = coefficient.abs();
  if (monomial.is_constant()) {
    os << magnitude.str();
    return;
  }
  if (!magnitude.is_one()) {
    if (magnitude.is_integer()) {
      os << magnitude.str() << '*';
    } else {
      os << '(' << magnitude.str() << ")*";
    }
  }
  print_power(os, ring, monomial, false);
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, RingPtr ring) {
  if (!ring) throw DomainError("null ring");
  return Parser(text, std::move(ring)).run();
}

std::string to_string(const Polynomial& polynomial) {
  if (polynomial.is_zero()) return "0";
  MonomialOrder order(OrderKind::GlobalDegRevLex, polynomial.variable_count());
  std::vector<const Polynomial::TermMap::value_type*> terms;
  terms.reserve(polynomial.term_count());
  for (const auto& entry : polynomial.terms()) terms.push_back(&entry);
  std::sort(terms.begin(), terms.end(), [&order](const auto* a, const auto* b) {
    return order.greater(a->first, b->first);
  });

  std::ostringstream os;
  const Ring& ring = *polynomial.ring();
  bool first = true;
  for (const auto* entry : terms) {
    const auto& [monomial, coefficient] = *entry;
    if (first) {
      if (coefficient.sign() < 0) os << '-';
      first = false;
    } else {
      os << (coefficient.sign() < 0 ? " - " : " + ");
    }
    print_term(os, ring, monomial, coefficient);
  }
  return os.str();
}

}  // namespace singlab
