#pragma once

#include <monomat/dense_matrix.hpp>
#include <monomat/monomial.hpp>
#include <monomat/polynomial.hpp>
#include <monomat/rational.hpp>

#include <cstddef>
#include <vector>

namespace monomat {

/// p(K_x) = sum_{r<n} c[r] K_x^r, where c[r] = sum_{k = qn + r} a_k alpha_x^q.
///
/// This is the radical-free form of p_{(r,n)}(alpha^{1/n}) / alpha^{r/n}: when
/// alpha_x = beta^n for a rational beta, c[r] * beta^r == p_{(r,n)}(beta).
struct BlockCoefficients {
  std::vector<Rational> c;

  std::size_t size() const noexcept { return c.size(); }
  friend bool operator==(const BlockCoefficients&, const BlockCoefficients&) = default;
};

inline BlockCoefficients block_coefficients(const Polynomial& p, const RationalVector& x) {
  require_nonzero(x, "block_coefficients");
  const std::size_t n = x.size();
  BlockCoefficients out{std::vector<Rational>(n)};
  if (p.is_zero()) return out;
  const Rational a = alpha(x);
  const std::size_t m = p.degree();
  // Horner in alpha over each residue class.
  for (std::size_t r = 0; r < n && r <= m; ++r) {
    const std::size_t top = r + (m - r) / n * n;
    Rational acc = 0;
    for (std::size_t k = top + n; k > r;) {
      k -= n;
      acc = acc * a + p.coefficients()[k];
    }
    out.c[r] = std::move(acc);
  }
  return out;
}

/// Dense sum_r c[r] K_x^r; entry (i, pi^r(i)) is c[r] times the orbit product.
inline DenseMatrix coefficients_to_dense(const BlockCoefficients& c, const RationalVector& x) {
  const std::size_t n = x.size();
  const auto diag = orbit_products(x);
  DenseMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (sgn(c.c[r]) == 0) continue;
    for (std::size_t i = 0; i < n; ++i) out(i, (i + r) % n) = c.c[r] * diag[r][i];
  }
  return out;
}

/// p(K_x), exact.
inline DenseMatrix eval_k(const Polynomial& p, const RationalVector& x) {
  return coefficients_to_dense(block_coefficients(p, x), x);
}

/// p(A) kept in factored form: the Frobenius normal form of A and one
/// coefficient vector per primitive block. Avoids materializing O(n^2) entries.
struct StructuredEvaluation {
  FrobeniusForm fnf;
  std::vector<BlockCoefficients> coefficients;

  std::size_t size() const noexcept { return fnf.size(); }

  /// Q ((+)_i sum_r c_{i,r} K_{y_i}^r) Q^T.
  DenseMatrix to_dense() const {
    const std::size_t n = size();
    DenseMatrix out(n, n);
    std::size_t offset = 0;
    for (std::size_t b = 0; b < fnf.blocks.size(); ++b) {
      const RationalVector& y = fnf.blocks[b];
      const std::size_t len = y.size();
      const auto diag = orbit_products(y);
      for (std::size_t r = 0; r < len; ++r) {
        const Rational& cr = coefficients[b].c[r];
        if (sgn(cr) == 0) continue;
        for (std::size_t i = 0; i < len; ++i) {
          const std::size_t row = fnf.order[offset + i] - 1;
          const std::size_t col = fnf.order[offset + (i + r) % len] - 1;
          out(row, col) = cr * diag[r][i];
        }
      }
      offset += len;
    }
    return out;
  }
};

inline StructuredEvaluation eval_structured(const Polynomial& p, const MonomialMatrix& a) {
  StructuredEvaluation out{frobenius_normal_form(a), {}};
  out.coefficients.reserve(out.fnf.blocks.size());
  for (const auto& y : out.fnf.blocks) out.coefficients.push_back(block_coefficients(p, y));
  return out;
}

/// p(A) = Q ((+)_i p(K_{y_i})) Q^T, exact.
inline DenseMatrix eval_monomial(const Polynomial& p, const MonomialMatrix& a) {
  return eval_structured(p, a).to_dense();
}

}  // namespace monomat
