#pragma once

#include <monomat/polynomial.hpp>
#include <monomat/rational.hpp>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace monomat {

// Grammar (whitespace ignored):
//   poly  := ['+'|'-'] term { ('+'|'-') term }
//   term  := coef | coef '*' 't' ['^' int] | 't' ['^' int]
//   coef  := int | int '/' int
// The Unicode minus sign U+2212 is accepted wherever '-' is.
// Repeated exponents are summed.
namespace detail {

class PolynomialParser {
 public:
  explicit PolynomialParser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    std::vector<Rational> coeffs;
    skip_space();
    if (at_end()) throw ParseError(pos_, "empty polynomial");
    bool first = true;
    while (true) {
      skip_space();
      int sign = 1;
      if (at_end()) throw ParseError(pos_, "expected a term");
      if (peek() == '+' || is_minus()) {
        sign = consume_sign();
      } else if (!first) {
        throw ParseError(pos_, "expected '+' or '-'");
      }
      skip_space();
      auto [coef, exponent] = term();
      if (sign < 0) coef = -coef;
      if (coeffs.size() <= exponent) coeffs.resize(exponent + 1);
      coeffs[exponent] += coef;
      first = false;
      skip_space();
      if (at_end()) break;
    }
    return Polynomial(std::move(coeffs));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_space() {
    while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\n' || peek() == '\r')) ++pos_;
  }

  bool is_minus() const {
    if (peek() == '-') return true;
    return text_.substr(pos_, 3) == "\xE2\x88\x92";
  }

  int consume_sign() {
    if (peek() == '+') {
      ++pos_;
      return 1;
    }
    pos_ += (peek() == '-') ? 1 : 3;
    return -1;
  }

  std::string digits() {
    const std::size_t begin = pos_;
    while (!at_end() && peek() >= '0' && peek() <= '9') ++pos_;
    if (pos_ == begin) throw ParseError(pos_, "expected digits");
    return std::string(text_.substr(begin, pos_ - begin));
  }

  Rational coefficient() {
    mpz_class num(digits());
    skip_space();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_space();
      const std::size_t den_pos = pos_;
      mpz_class den(digits());
      if (den == 0) throw ParseError(den_pos, "zero denominator");
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
    return Rational(num);
  }

  std::size_t power_of_t() {
    ++pos_;  // 't'
    skip_space();
    if (at_end() || peek() != '^') return 1;
    ++pos_;
    skip_space();
    const std::size_t at = pos_;
    const std::string d = digits();
    if (d.size() > 9) throw ParseError(at, "exponent too large");
    return static_cast<std::size_t>(std::stoul(d));
  }

  std::pair<Rational, std::size_t> term() {
    if (at_end()) throw ParseError(pos_, "expected a term");
    if (peek() == 't') return {Rational(1), power_of_t()};
    if (peek() < '0' || peek() > '9') throw ParseError(pos_, std::string("unexpected character '") + peek() + "'");
    Rational c = coefficient();
    skip_space();
    if (!at_end() && peek() == '*') {
      ++pos_;
      skip_space();
      if (at_end() || peek() != 't') throw ParseError(pos_, "expected 't' after '*'");
      return {c, power_of_t()};
    }
    return {c, 0};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_polynomial(std::string_view text) { return detail::PolynomialParser(text).parse(); }

/// Highest degree first, e.g. "t^3 - 2*t^2 + t" or "1/2*t - 3". Re-parses to
/// the same value.
inline std::string format_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = p.degree() + 1; k-- > 0;) {
    const Rational& c = p.coefficients()[k];
    if (sgn(c) == 0) continue;
    const Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    if (k == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "t";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace monomat
