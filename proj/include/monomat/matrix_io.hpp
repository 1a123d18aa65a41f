#pragma once

#include <monomat/dense_matrix.hpp>
#include <monomat/monomial.hpp>
#include <monomat/rational.hpp>

#include <json.hpp>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace monomat::io {

// Dense text:      first token n, then n*n rationals row by row (`p/q` or integers).
// Structured JSON: {"n": 4, "perm": [2, 3, 4, 1], "values": ["3", "5", "2", "1"]}
//                  perm is the 1-indexed image list; values are strings or integers.
enum class MatrixFormat { Auto, Dense, Structured };

inline MatrixFormat parse_format_name(std::string_view name) {
  if (name == "auto") return MatrixFormat::Auto;
  if (name == "dense") return MatrixFormat::Dense;
  if (name == "structured") return MatrixFormat::Structured;
  throw InvalidArgument("unknown matrix format '" + std::string(name) + "' (expected auto, dense or structured)");
}

inline MatrixFormat detect_format(std::string_view text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    return c == '{' ? MatrixFormat::Structured : MatrixFormat::Dense;
  }
  throw ParseError(0, "empty matrix input");
}

namespace detail {

struct Token {
  std::string_view text;
  std::size_t offset;
};

inline std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  auto space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (i < text.size()) {
    while (i < text.size() && space(text[i])) ++i;
    const std::size_t begin = i;
    while (i < text.size() && !space(text[i])) ++i;
    if (i > begin) tokens.push_back({text.substr(begin, i - begin), begin});
  }
  return tokens;
}

inline Rational token_rational(const Token& t) {
  try {
    return parse_rational(t.text);
  } catch (const ParseError& e) {
    throw ParseError(t.offset + e.position(), "bad rational '" + std::string(t.text) + "'");
  }
}

inline std::size_t token_size(const Token& t) {
  const Rational q = token_rational(t);
  if (q.get_den() != 1 || sgn(q) <= 0 || !q.get_num().fits_ulong_p())
    throw ParseError(t.offset, "matrix order must be a positive integer, got '" + std::string(t.text) + "'");
  return q.get_num().get_ui();
}

inline Rational json_rational(const nlohmann::json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return parse_rational(v.dump());
  throw ParseError(0, "structured matrix: values must be strings or integers, got " + v.dump());
}

}  // namespace detail

inline DenseMatrix parse_dense(std::string_view text) {
  const auto tokens = detail::tokenize(text);
  if (tokens.empty()) throw ParseError(0, "empty matrix input");
  const std::size_t n = detail::token_size(tokens[0]);
  if (tokens.size() != 1 + n * n)
    throw ParseError(tokens.back().offset, "expected " + std::to_string(n * n) + " entries after the order, found " +
                                               std::to_string(tokens.size() - 1));
  DenseMatrix m(n, n);
  for (std::size_t k = 0; k < n * n; ++k) m(k / n, k % n) = detail::token_rational(tokens[1 + k]);
  return m;
}

inline MonomialMatrix parse_structured(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte > 0 ? e.byte - 1 : 0, std::string("structured matrix: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("perm") || !doc.contains("values"))
    throw ParseError(0, "structured matrix: expected an object with fields n, perm, values");
  if (!doc["n"].is_number_unsigned()) throw ParseError(0, "structured matrix: n must be a positive integer");
  const auto n = doc["n"].get<std::size_t>();
  const auto& perm = doc["perm"];
  const auto& values = doc["values"];
  if (!perm.is_array() || perm.size() != n || !values.is_array() || values.size() != n)
    throw ParseError(0, "structured matrix: perm and values must be arrays of length n");
  std::vector<std::size_t> images;
  for (const auto& v : perm) {
    if (!v.is_number_unsigned()) throw ParseError(0, "structured matrix: perm entries must be positive integers");
    images.push_back(v.get<std::size_t>());
  }
  RationalVector x;
  for (const auto& v : values) x.push_back(detail::json_rational(v));
  for (std::size_t i = 0; i < n; ++i)
    if (sgn(x[i]) == 0) throw NotMonomial(i + 1, "zero value");
  return MonomialMatrix(std::move(x), Permutation(std::move(images)));
}

/// Reads a monomial matrix in either format.
inline MonomialMatrix parse_monomial(std::string_view text, MatrixFormat format = MatrixFormat::Auto) {
  if (format == MatrixFormat::Auto) format = detect_format(text);
  if (format == MatrixFormat::Structured) return parse_structured(text);
  return from_dense(parse_dense(text));
}

inline std::string format_dense(const DenseMatrix& m) {
  std::string out = std::to_string(m.rows()) + "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ' ';
      out += m(i, j).get_str();
    }
    out += '\n';
  }
  return out;
}

inline nlohmann::json to_json(const MonomialMatrix& a) {
  nlohmann::json values = nlohmann::json::array();
  for (const auto& v : a.values()) values.push_back(v.get_str());
  return {{"n", a.size()}, {"perm", a.perm().images()}, {"values", values}};
}

inline std::string format_structured(const MonomialMatrix& a) { return to_json(a).dump() + "\n"; }

}  // namespace monomat::io
