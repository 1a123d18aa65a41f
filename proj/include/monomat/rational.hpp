#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace monomat {

/// Exact scalar. Always canonical: reduced, positive denominator.
using Rational = mpq_class;

/// A vector of exact scalars, indexed 0..n-1 in storage (entry i holds x_{i+1}).
using RationalVector = std::vector<Rational>;

// Base class for every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Raised when a dense matrix is not a monomial matrix. `row` is 1-indexed.
class NotMonomial : public Error {
 public:
  NotMonomial(std::size_t row, const std::string& what)
      : Error("not a monomial matrix: row " + std::to_string(row) + ": " + what),
        row_(row) {}
  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

/// Parse failure; `position` is a 0-based character offset into the input.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error("parse error at position " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

inline Rational pow(const Rational& base, unsigned long exponent) {
  Rational result;
  mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  // base canonical => result canonical (sign lives in the numerator).
  return result;
}

inline Rational product(const RationalVector& x) {
  Rational acc = 1;
  for (const auto& v : x) acc *= v;
  return acc;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses `123`, `-4`, `7/3`, `-7/3` (surrounding whitespace not allowed).
inline Rational parse_rational(std::string_view text) {
  auto bad = [&](std::size_t pos, const char* why) -> ParseError {
    return ParseError(pos, std::string(why) + " in '" + std::string(text) + "'");
  };
  if (text.empty()) throw bad(0, "empty rational");
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') ++i;
  const std::size_t num_begin = i;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
  if (i == num_begin) throw bad(i, "expected digits");
  std::size_t den_begin = text.size();
  if (i < text.size()) {
    if (text[i] != '/') throw bad(i, "unexpected character");
    den_begin = ++i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (i == den_begin) throw bad(i, "expected denominator digits");
    if (i != text.size()) throw bad(i, "unexpected character");
  }
  mpz_class num(std::string(text.substr(num_begin, (den_begin == text.size() ? text.size() : den_begin - 1) - num_begin)));
  if (text[0] == '-') num = -num;
  mpz_class den = 1;
  if (den_begin != text.size()) {
    den = mpz_class(std::string(text.substr(den_begin)));
    if (den == 0) throw bad(den_begin, "zero denominator");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace monomat
