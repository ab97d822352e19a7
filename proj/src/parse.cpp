#include <cctype>
#include <string>

#include "sqfree/error.hpp"
#include "sqfree/poly.hpp"

namespace sqfree {

namespace {

// Exponents above this are treated as input errors rather than allocated.
constexpr std::size_t kMaxExponent = 1u << 20;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Poly parse() {
    std::vector<Rational> coeffs;
    skip_ws();
    if (at_end()) fail("empty polynomial");

    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
      skip_ws();
    }
    add_term(coeffs, negative);
    for (;;) {
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail(unexpected());
      negative = peek() == '-';
      ++pos_;
      skip_ws();
      add_term(coeffs, negative);
    }
    return Poly(std::move(coeffs));
  }

 private:
  void add_term(std::vector<Rational>& coeffs, bool negative) {
    Rational c(1);
    std::size_t power = 0;
    if (at_end()) fail("expected a term");
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      c = coefficient();
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end() || !is_var(peek())) fail("expected 'X' after '*'");
        power = variable();
      } else if (!at_end() && is_var(peek())) {
        power = variable();
      }
    } else if (is_var(peek())) {
      power = variable();
    } else {
      fail(unexpected());
    }
    if (coeffs.size() <= power) coeffs.resize(power + 1);
    if (negative) {
      coeffs[power] -= c;
    } else {
      coeffs[power] += c;
    }
  }

  Rational coefficient() {
    const std::string num = digits();
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      const std::size_t den_pos = pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
        fail("expected denominator");
      }
      const std::string den = digits();
      const mpz_class d(den, 10);
      if (d == 0) throw ParseError("zero denominator", den_pos);
      return Rational(mpz_class(num, 10), d);
    }
    return Rational(mpz_class(num, 10));
  }

  std::size_t variable() {
    ++pos_;  // 'X'
    skip_ws();
    if (at_end() || peek() != '^') return 1;
    ++pos_;
    skip_ws();
    const std::size_t exp_pos = pos_;
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      fail("expected exponent after '^'");
    }
    const std::string e = digits();
    if (e.size() > 7 || std::stoul(e) > kMaxExponent) {
      throw ParseError("exponent too large", exp_pos);
    }
    return std::stoul(e);
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (!at_end() && (peek() == '.' || peek() == 'e' || peek() == 'E')) {
      fail("only integer and rational literals are allowed");
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  static bool is_var(char c) { return c == 'X' || c == 'x'; }

  std::string unexpected() const {
    return std::string("unexpected character '") + peek() + "'";
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text) { return Parser(text).parse(); }

}  // namespace sqfree
