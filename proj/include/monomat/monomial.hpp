#pragma once

#include <monomat/dense_matrix.hpp>
#include <monomat/permutation.hpp>
#include <monomat/rational.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace monomat {

/// A = D_x P_sigma: row i holds x_i in column sigma(i) and zeros elsewhere.
/// Every x_i is nonzero.
class MonomialMatrix {
 public:
  MonomialMatrix(RationalVector values, Permutation perm) : values_(std::move(values)), perm_(std::move(perm)) {
    if (values_.size() != perm_.size())
      throw DimensionMismatch("monomial: " + std::to_string(values_.size()) + " values for a permutation of order " +
                              std::to_string(perm_.size()));
    for (std::size_t i = 0; i < values_.size(); ++i)
      if (sgn(values_[i]) == 0) throw InvalidArgument("monomial: zero value at index " + std::to_string(i + 1));
  }

  static MonomialMatrix identity(std::size_t n) {
    return MonomialMatrix(RationalVector(n, Rational(1)), Permutation::identity(n));
  }

  std::size_t size() const noexcept { return values_.size(); }
  const RationalVector& values() const noexcept { return values_; }
  const Permutation& perm() const noexcept { return perm_; }

  bool is_nonnegative() const {
    for (const auto& v : values_)
      if (sgn(v) <= 0) return false;
    return true;
  }

  friend bool operator==(const MonomialMatrix&, const MonomialMatrix&) = default;

 private:
  RationalVector values_;
  Permutation perm_;
};

inline void require_nonzero(const RationalVector& x, const char* where) {
  if (x.empty()) throw InvalidArgument(std::string(where) + ": empty vector");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) == 0) throw InvalidArgument(std::string(where) + ": zero entry at index " + std::to_string(i + 1));
}

/// K_x = D_x C_n.
inline MonomialMatrix k_of(const RationalVector& x) {
  require_nonzero(x, "k_of");
  return MonomialMatrix(x, Permutation::cyclic(x.size()));
}

/// alpha_x = det D_x.
inline Rational alpha(const RationalVector& x) { return product(x); }

inline DenseMatrix to_dense(const MonomialMatrix& a) {
  DenseMatrix m(a.size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m(i, a.perm().images()[i] - 1) = a.values()[i];
  return m;
}

inline MonomialMatrix from_dense(const DenseMatrix& m) {
  if (!m.square()) throw DimensionMismatch("from_dense: matrix is not square");
  if (m.rows() == 0) throw InvalidArgument("from_dense: empty matrix");
  const std::size_t n = m.rows();
  RationalVector values(n);
  std::vector<std::size_t> images(n);
  std::vector<std::size_t> column_owner(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t nonzeros = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(m(i, j)) == 0) continue;
      ++nonzeros;
      images[i] = j + 1;
      values[i] = m(i, j);
    }
    if (nonzeros != 1)
      throw NotMonomial(i + 1, std::to_string(nonzeros) + " nonzero entries (expected exactly 1)");
    const std::size_t col = images[i] - 1;
    if (column_owner[col] != 0)
      throw NotMonomial(i + 1, "column " + std::to_string(col + 1) + " already used by row " +
                                   std::to_string(column_owner[col]));
    column_owner[col] = i + 1;
  }
  return MonomialMatrix(std::move(values), Permutation(std::move(images)));
}

/// (D_x P_s)(D_y P_t) = D_{x * s(y)} P_{compose(s, t)}.
inline MonomialMatrix multiply(const MonomialMatrix& a, const MonomialMatrix& b) {
  if (a.size() != b.size())
    throw DimensionMismatch("multiply: orders " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
  RationalVector values = permute(a.perm(), b.values());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] *= a.values()[i];
  return MonomialMatrix(std::move(values), compose(a.perm(), b.perm()));
}

/// Q^T A Q = (+)_i K_{blocks[i]} with Q = to_matrix(gamma).
struct FrobeniusForm {
  Permutation gamma;
  std::vector<RationalVector> blocks;
  /// 1-based original index sitting at each position of the block-diagonal
  /// form (gamma^{-1} as an image list).
  std::vector<std::size_t> order;

  std::size_t size() const noexcept { return order.size(); }
};

inline FrobeniusForm frobenius_normal_form(const MonomialMatrix& a) {
  CycleDecomposition cd = cycle_decomposition(a.perm());
  // y = gamma^{-1}(x), cut into consecutive blocks of the cycle sizes.
  std::vector<RationalVector> blocks;
  blocks.reserve(cd.sizes.size());
  std::size_t pos = 0;
  for (std::size_t len : cd.sizes) {
    RationalVector y(len);
    for (std::size_t t = 0; t < len; ++t) y[t] = a.values()[cd.order[pos + t] - 1];
    blocks.push_back(std::move(y));
    pos += len;
  }
  return {std::move(cd.gamma), std::move(blocks), std::move(cd.order)};
}

/// Products along pi-orbits: entry i of the result is prod_{t=0}^{r-1} x_{pi^t(i)}
/// (0-based storage). These are the diagonal factors of K_x^r = (prod D_{pi^t(x)}) C^r.
inline RationalVector orbit_product(const RationalVector& x, std::size_t r) {
  const std::size_t n = x.size();
  RationalVector d(n, Rational(1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < r; ++t) d[i] *= x[(i + t) % n];
  return d;
}

/// All orbit products for r = 0..n-1, built incrementally in O(n^2) multiplies.
inline std::vector<RationalVector> orbit_products(const RationalVector& x) {
  const std::size_t n = x.size();
  std::vector<RationalVector> table;
  table.reserve(n);
  table.emplace_back(n, Rational(1));
  for (std::size_t r = 1; r < n; ++r) {
    RationalVector next(n);
    for (std::size_t i = 0; i < n; ++i) next[i] = table[r - 1][i] * x[(i + r - 1) % n];
    table.push_back(std::move(next));
  }
  return table;
}

/// K_x^j = alpha_x^q (prod_{t<r} D_{pi^t(x)}) C^r with q = j / n, r = j mod n.
inline MonomialMatrix power_primitive(const RationalVector& x, unsigned long j) {
  require_nonzero(x, "power_primitive");
  const std::size_t n = x.size();
  const unsigned long q = j / n;
  const std::size_t r = j % n;
  RationalVector values = orbit_product(x, r);
  if (q > 0) {
    const Rational scale = pow(alpha(x), q);
    for (auto& v : values) v *= scale;
  }
  std::vector<std::size_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = (i + r) % n + 1;
  return MonomialMatrix(std::move(values), Permutation(std::move(images)));
}

/// A^j through the Frobenius normal form, one primitive power per block.
inline MonomialMatrix power(const MonomialMatrix& a, unsigned long j) {
  if (j == 0) return MonomialMatrix::identity(a.size());
  const FrobeniusForm fnf = frobenius_normal_form(a);
  RationalVector values(a.size());
  std::vector<std::size_t> images(a.size());
  std::size_t offset = 0;
  for (const auto& y : fnf.blocks) {
    const MonomialMatrix block = power_primitive(y, j);
    for (std::size_t t = 0; t < y.size(); ++t) {
      const std::size_t row = fnf.order[offset + t];
      const std::size_t col = fnf.order[offset + block.perm().images()[t] - 1];
      values[row - 1] = block.values()[t];
      images[row - 1] = col;
    }
    offset += y.size();
  }
  return MonomialMatrix(std::move(values), Permutation(std::move(images)));
}

}  // namespace monomat
