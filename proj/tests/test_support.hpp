#pragma once

#include <monomat/monomat.hpp>

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

// gtest value printer; mpq_class lives in the global namespace.
inline void PrintTo(const mpq_class& q, std::ostream* os) { *os << q.get_str(); }

namespace monomat::testing {

inline Rational q(const char* text) { return parse_rational(text); }

inline RationalVector vec(std::initializer_list<const char*> entries) {
  RationalVector v;
  for (const char* e : entries) v.push_back(parse_rational(e));
  return v;
}

inline DenseMatrix dense(std::size_t n, std::initializer_list<long> entries) {
  DenseMatrix m(n, n);
  std::size_t k = 0;
  for (long e : entries) {
    m(k / n, k % n) = e;
    ++k;
  }
  return m;
}

/// Nonzero rationals of either sign, |num|, den <= bound.
inline RationalVector random_nonzero_vector(oracle::SplitMix64& rng, std::size_t n, std::uint64_t bound) {
  RationalVector x(n);
  for (auto& v : x) {
    v = oracle::random_positive_rational(rng, bound);
    if (rng.below(2) == 1) v = -v;
  }
  return x;
}

/// Rational coefficients with numerators in [-bound, bound], denominators in [1, den_bound].
inline Polynomial random_rational_polynomial(oracle::SplitMix64& rng, std::size_t degree, std::int64_t bound,
                                             std::int64_t den_bound) {
  std::vector<Rational> a(degree + 1);
  for (auto& c : a) {
    Rational v(static_cast<long>(rng.between(-bound, bound)), static_cast<unsigned long>(rng.between(1, den_bound)));
    v.canonicalize();
    c = v;
  }
  if (sgn(a.back()) == 0) a.back() = 1;
  return Polynomial(std::move(a));
}

/// (t - root)
inline Polynomial linear(const Rational& root) { return Polynomial({-root, Rational(1)}); }

inline Polynomial power_of(const Polynomial& p, unsigned e) {
  Polynomial acc = Polynomial::constant(1);
  for (unsigned i = 0; i < e; ++i) acc = acc * p;
  return acc;
}

}  // namespace monomat::testing

namespace monomat::testing {

/// (f1^2 + f2^2) + t (g1^2 + g2^2) with random rational f_i, g_i of degree <= max_degree.
/// Half the time every factor shares (t - a)^1 with a > 0, so the result has a
/// double root on the positive axis.
inline Polynomial random_p1_polynomial(oracle::SplitMix64& rng, std::size_t max_degree) {
  auto factor = [&] { return random_rational_polynomial(rng, rng.below(max_degree + 1), 5, 3); };
  Polynomial f1 = factor(), f2 = factor(), g1 = factor(), g2 = factor();
  if (rng.below(2)) {
    const Polynomial shared = linear(oracle::random_positive_rational(rng, 6));
    f1 = f1 * shared;
    f2 = f2 * shared;
    g1 = g1 * shared;
    g2 = g2 * shared;
  }
  return f1 * f1 + f2 * f2 + Polynomial::monomial(1, 1) * (g1 * g1 + g2 * g2);
}

}  // namespace monomat::testing
