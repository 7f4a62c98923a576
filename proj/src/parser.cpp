// SPDX-License-Identifier: Apache-2.0

#include "gradalg/parser.hpp"

#include <cctype>
#include <string>

#include "gradalg/errors.hpp"

namespace gradalg {

namespace {

constexpr long kMaxExponent = 1'000'000;

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    skip_space();
    if (at_end()) fail("empty polynomial");
    Polynomial p = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { fail_at(message, pos_); }
  [[noreturn]] void fail_at(const std::string& message, std::size_t pos) const {
    throw InputError(message, "column " + std::to_string(pos + 1));
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Polynomial expr() {
    Polynomial acc(ring_);
    skip_space();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    Polynomial first = term();
    acc += negate ? -first : first;
    for (;;) {
      skip_space();
      if (peek() != '+' && peek() != '-') break;
      negate = peek() == '-';
      ++pos_;
      Polynomial t = term();
      acc += negate ? -t : t;
    }
    return acc;
  }

  bool starts_factor() {
    skip_space();
    const char ch = peek();
    return std::isdigit(static_cast<unsigned char>(ch)) ||
           std::isalpha(static_cast<unsigned char>(ch)) || ch == '_' || ch == '(';
  }

  Polynomial term() {
    if (!starts_factor()) {
      fail(at_end() ? "expected a term at end of input"
                    : std::string("expected a term, found '") + peek() + "'");
    }
    Polynomial acc = factor();
    for (;;) {
      skip_space();
      if (peek() == '*') {
        ++pos_;
        if (!starts_factor()) fail("expected a factor after '*'");
        acc *= factor();
      } else if (starts_factor()) {
        acc *= factor();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    skip_space();
    if (peek() != '^') return base;
    ++pos_;
    skip_space();
    const std::size_t start = pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      fail("malformed exponent: expected a non-negative integer");
    }
    long e = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      e = e * 10 + (peek() - '0');
      if (e > kMaxExponent) fail_at("exponent too large", start);
      ++pos_;
    }
    return base.pow(static_cast<unsigned>(e));
  }

  mpz_class integer() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial primary() {
    skip_space();
    const std::size_t start = pos_;
    const char ch = peek();
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      mpz_class num = integer();
      skip_space();
      if (peek() == '/') {
        ++pos_;
        skip_space();
        const std::size_t den_pos = pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
          fail("expected an integer denominator after '/'");
        }
        mpz_class den = integer();
        try {
          return Polynomial::constant(ring_, Scalar::from_fraction(ring_->field(), num, den));
        } catch (const InputError& e) {
          fail_at(e.what(), den_pos);
        }
      }
      return Polynomial::constant(ring_, Scalar::from_integer(ring_->field(), num));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      auto idx = ring_->index_of(name);
      if (!idx) fail_at("unknown variable '" + name + "'", start);
      return Polynomial::variable(ring_, *idx);
    }
    if (ch == '(') {
      ++pos_;
      Polynomial inner = expr();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    fail("unexpected character");
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return Parser(text, ring).parse();
}

}  // namespace gradalg
