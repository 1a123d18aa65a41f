#pragma once

// Brute-force reference implementations. Nothing in here uses the monomial
// structure; agreement with the structured code is the evidence.

#include <monomat/dense_matrix.hpp>
#include <monomat/monomial.hpp>
#include <monomat/permutation.hpp>
#include <monomat/polynomial.hpp>
#include <monomat/rational.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace monomat::oracle {

/// Textbook triple loop. Zero left factors are skipped, which changes no result.
inline DenseMatrix dense_multiply(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows())
    throw DimensionMismatch("dense_multiply: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " by " +
                            std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  DenseMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

/// j-fold repeated multiplication; no squaring.
inline DenseMatrix dense_power(const DenseMatrix& a, unsigned long j) {
  if (!a.square()) throw DimensionMismatch("dense_power: matrix is not square");
  DenseMatrix acc = DenseMatrix::identity(a.rows());
  for (unsigned long step = 0; step < j; ++step) acc = dense_multiply(acc, a);
  return acc;
}

/// (...(a_m A + a_{m-1} I) A + ...) + a_0 I.
inline DenseMatrix dense_horner_eval(const Polynomial& p, const DenseMatrix& a) {
  if (!a.square()) throw DimensionMismatch("dense_horner_eval: matrix is not square");
  const std::size_t n = a.rows();
  DenseMatrix acc(n, n);
  if (p.is_zero()) return acc;
  for (std::size_t k = p.degree() + 1; k-- > 0;) {
    if (k != p.degree()) acc = dense_multiply(acc, a);
    const Rational& c = p.coefficients()[k];
    if (sgn(c) == 0) continue;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += c;
  }
  return acc;
}

/// splitmix64 (Steele, Lea, Flood). Fixed so every seeded draw is reproducible.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish in [0, bound) by modulo reduction.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  /// Uniform-ish in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

 private:
  std::uint64_t state_;
};

/// num/den with 1 <= num, den <= bound.
inline Rational random_positive_rational(SplitMix64& rng, std::uint64_t bound) {
  const auto num = static_cast<unsigned long>(1 + rng.below(bound));
  const auto den = static_cast<unsigned long>(1 + rng.below(bound));
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Fisher-Yates from the top: for i = n-1..1 swap slot i with slot below(i+1).
inline Permutation random_permutation(SplitMix64& rng, std::size_t n) {
  std::vector<std::size_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = i + 1;
  for (std::size_t i = n; i-- > 1;) std::swap(images[i], images[rng.below(i + 1)]);
  return Permutation(std::move(images));
}

/// Deterministic from the seed: permutation first, then values x_1..x_n.
inline MonomialMatrix random_monomial(std::uint64_t seed, std::size_t n, std::uint64_t value_bound) {
  if (n == 0) throw InvalidArgument("random_monomial: n must be at least 1");
  if (value_bound == 0) throw InvalidArgument("random_monomial: value_bound must be positive");
  SplitMix64 rng(seed);
  Permutation perm = random_permutation(rng, n);
  RationalVector values(n);
  for (auto& v : values) v = random_positive_rational(rng, value_bound);
  return MonomialMatrix(std::move(values), std::move(perm));
}

/// Degree exactly `degree`, integer coefficients in [lo, hi]; a zero leading
/// draw is replaced by hi.
inline Polynomial random_polynomial(SplitMix64& rng, std::size_t degree, std::int64_t lo, std::int64_t hi) {
  std::vector<Rational> a(degree + 1);
  for (auto& c : a) c = static_cast<long>(rng.between(lo, hi));
  if (sgn(a.back()) == 0) a.back() = static_cast<long>(hi == 0 ? lo : hi);
  return Polynomial(std::move(a));
}

namespace detail {

// Sign of p(a/b), b > 0, through the homogenized integer form
// sum_k c_k a^k b^(m-k) with integer c_k = lcm(denominators) * a_k.
class IntegerSignEvaluator {
 public:
  explicit IntegerSignEvaluator(const Polynomial& p) {
    if (p.is_zero()) return;
    mpz_class l = 1;
    for (const auto& c : p.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    for (const auto& c : p.coefficients()) coeffs_.push_back(c.get_num() * (l / c.get_den()));
  }

  int sign_at(const Rational& t) const {
    if (coeffs_.empty()) return 0;
    const mpz_class& a = t.get_num();
    const mpz_class& b = t.get_den();
    mpz_class acc = coeffs_.back();
    mpz_class bp = 1;
    for (std::size_t k = coeffs_.size() - 1; k-- > 0;) {
      bp *= b;
      acc = acc * a + coeffs_[k] * bp;
    }
    return sgn(acc);
  }

 private:
  std::vector<mpz_class> coeffs_;
};

}  // namespace detail

/// The refuter's grid. Forty octaves [2^e, 2^(e+1)) for e = -20..19 with
/// S = max(1, (points - 33) / 40) equally spaced points 2^e (1 + s/S) each,
/// then 33 points B (1 + j/16), j = -16..16, around the Cauchy bound B
/// (B = 1 for constants).
inline std::vector<Rational> refuter_grid(const Polynomial& p, std::size_t points) {
  std::vector<Rational> grid;
  const std::size_t per_octave = points > 73 ? (points - 33) / 40 : 1;
  for (int e = -20; e < 20; ++e) {
    Rational base = 1;
    if (e >= 0)
      mpz_mul_2exp(base.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
    else
      mpz_mul_2exp(base.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(-e));
    for (std::size_t s = 0; s < per_octave; ++s) {
      Rational frac(static_cast<unsigned long>(s), static_cast<unsigned long>(per_octave));
      frac.canonicalize();
      grid.push_back(base * (1 + frac));
    }
  }
  const Rational bound = (p.is_zero() || p.degree() == 0) ? Rational(1) : cauchy_bound(p);
  for (int j = -16; j <= 16; ++j) {
    Rational frac(j, 16);
    frac.canonicalize();
    grid.push_back(bound * (1 + frac));
  }
  return grid;
}

/// Searches the grid for t >= 0 with p(t) < 0. Absence of a witness proves nothing.
inline std::optional<Rational> sample_refute_P1(const Polynomial& p, std::size_t points) {
  if (p.is_zero()) return std::nullopt;
  const detail::IntegerSignEvaluator eval(p);
  for (const auto& t : refuter_grid(p, points))
    if (eval.sign_at(t) < 0) return t;
  return std::nullopt;
}

}  // namespace monomat::oracle
