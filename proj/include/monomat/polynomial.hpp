#pragma once

#include <monomat/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace monomat {

/// p(t) = sum_k a_k t^k over exact rationals. Coefficients are stored densely,
/// lowest degree first, with trailing zeros trimmed; the zero polynomial has
/// no coefficients and no degree.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients) : a_(std::move(coefficients)) { trim(); }
  Polynomial(std::initializer_list<Rational> coefficients) : a_(coefficients) { trim(); }

  static Polynomial constant(const Rational& c) { return Polynomial({c}); }

  /// c * t^k
  static Polynomial monomial(const Rational& c, std::size_t k) {
    std::vector<Rational> a(k + 1);
    a[k] = c;
    return Polynomial(std::move(a));
  }

  bool is_zero() const noexcept { return a_.empty(); }

  std::size_t degree() const {
    if (a_.empty()) throw InvalidArgument("degree of the zero polynomial");
    return a_.size() - 1;
  }

  const Rational& leading() const {
    if (a_.empty()) throw InvalidArgument("leading coefficient of the zero polynomial");
    return a_.back();
  }

  /// a_k, zero beyond the degree.
  Rational coefficient(std::size_t k) const { return k < a_.size() ? a_[k] : Rational(0); }
  const std::vector<Rational>& coefficients() const noexcept { return a_; }

  /// Index of the lowest nonzero coefficient.
  std::size_t lowest_degree() const {
    for (std::size_t k = 0; k < a_.size(); ++k)
      if (sgn(a_[k]) != 0) return k;
    throw InvalidArgument("lowest degree of the zero polynomial");
  }

  /// Horner.
  Rational operator()(const Rational& t) const {
    Rational acc = 0;
    for (auto it = a_.rbegin(); it != a_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  Polynomial& operator+=(const Polynomial& q) {
    if (q.a_.size() > a_.size()) a_.resize(q.a_.size());
    for (std::size_t k = 0; k < q.a_.size(); ++k) a_[k] += q.a_[k];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& q) {
    if (q.a_.size() > a_.size()) a_.resize(q.a_.size());
    for (std::size_t k = 0; k < q.a_.size(); ++k) a_[k] -= q.a_[k];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Rational& s) {
    if (sgn(s) == 0) {
      a_.clear();
      return *this;
    }
    for (auto& c : a_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator-(Polynomial p) { return p *= Rational(-1); }
  friend Polynomial operator*(const Rational& s, Polynomial p) { return p *= s; }

  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<Rational> c(p.a_.size() + q.a_.size() - 1);
    for (std::size_t i = 0; i < p.a_.size(); ++i) {
      if (sgn(p.a_[i]) == 0) continue;
      for (std::size_t j = 0; j < q.a_.size(); ++j) c[i + j] += p.a_[i] * q.a_[j];
    }
    return Polynomial(std::move(c));
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim() {
    while (!a_.empty() && sgn(a_.back()) == 0) a_.pop_back();
  }

  std::vector<Rational> a_;
};

/// Euclidean division: p = quotient * d + remainder, deg remainder < deg d.
inline std::pair<Polynomial, Polynomial> divmod(const Polynomial& p, const Polynomial& d) {
  if (d.is_zero()) throw InvalidArgument("polynomial division by zero");
  if (p.is_zero() || p.degree() < d.degree()) return {Polynomial{}, p};
  std::vector<Rational> rem = p.coefficients();
  const std::size_t dd = d.degree();
  std::vector<Rational> quo(p.degree() - dd + 1);
  const Rational& lead = d.leading();
  for (std::size_t k = p.degree() + 1; k-- > dd;) {
    if (sgn(rem[k]) == 0) continue;
    const Rational f = rem[k] / lead;
    quo[k - dd] = f;
    for (std::size_t i = 0; i <= dd; ++i) rem[k - dd + i] -= f * d.coefficients()[i];
  }
  rem.resize(dd);
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

/// Exact quotient; throws if `d` does not divide `p`.
inline Polynomial exact_divide(const Polynomial& p, const Polynomial& d) {
  auto [q, r] = divmod(p, d);
  if (!r.is_zero()) throw InvalidArgument("exact_divide: nonzero remainder");
  return q;
}

inline Polynomial derivative(const Polynomial& p) {
  if (p.is_zero() || p.degree() == 0) return {};
  std::vector<Rational> c(p.degree());
  for (std::size_t k = 1; k <= p.degree(); ++k) c[k - 1] = p.coefficients()[k] * static_cast<unsigned long>(k);
  return Polynomial(std::move(c));
}

inline Polynomial monic(const Polynomial& p) {
  if (p.is_zero()) return p;
  return Rational(1) / p.leading() * p;
}

/// Monic greatest common divisor.
inline Polynomial gcd(Polynomial p, Polynomial q) {
  if (p.is_zero() && q.is_zero()) throw InvalidArgument("gcd(0, 0) is undefined");
  while (!q.is_zero()) {
    Polynomial r = divmod(p, q).second;
    p = std::move(q);
    q = monic(r);
  }
  return monic(p);
}

/// r mod n-part: the terms of p whose exponent is congruent to r modulo n.
inline Polynomial part(const Polynomial& p, std::size_t r, std::size_t n) {
  if (n == 0) throw InvalidArgument("part: n must be at least 1");
  if (r >= n) throw InvalidArgument("part: r = " + std::to_string(r) + " must be below n = " + std::to_string(n));
  if (p.is_zero() || r > p.degree()) return {};
  std::vector<Rational> c(p.degree() + 1);
  for (std::size_t k = r; k <= p.degree(); k += n) c[k] = p.coefficients()[k];
  return Polynomial(std::move(c));
}

inline Polynomial parts_sum(const Polynomial& p, std::size_t n) {
  if (n == 0) throw InvalidArgument("parts_sum: n must be at least 1");
  Polynomial acc;
  for (std::size_t r = 0; r < n; ++r) acc += part(p, r, n);
  return acc;
}

/// Yun's square-free decomposition of a nonconstant p: monic f_1, f_2, ...
/// with p = c * prod_i f_i^i and each f_i square-free (possibly constant 1).
inline std::vector<Polynomial> squarefree_decomposition(const Polynomial& p) {
  if (p.is_zero()) throw InvalidArgument("squarefree_decomposition of the zero polynomial");
  std::vector<Polynomial> factors;
  if (p.degree() == 0) return factors;
  const Polynomial dp = derivative(p);
  const Polynomial a0 = gcd(p, dp);
  Polynomial b = exact_divide(p, a0);
  Polynomial c = exact_divide(dp, a0);
  Polynomial d = c - derivative(b);
  while (b.degree() > 0) {
    Polynomial f = gcd(b, d);
    b = exact_divide(b, f);
    c = exact_divide(d, f);
    d = c - derivative(b);
    factors.push_back(std::move(f));
  }
  return factors;
}

/// Square-free polynomial whose roots are exactly the roots of p of odd
/// multiplicity (product of the odd-index Yun factors); 1 when there are none.
inline Polynomial squarefree_odd_part(const Polynomial& p) {
  Polynomial s = Polynomial::constant(1);
  const auto factors = squarefree_decomposition(p);
  for (std::size_t i = 0; i < factors.size(); i += 2) s = s * factors[i];
  return s;
}

/// 1 + max_{i<m} |a_i| / |a_m|; every complex root has modulus strictly below it.
inline Rational cauchy_bound(const Polynomial& p) {
  const Rational lead = abs(p.leading());
  Rational best = 0;
  for (std::size_t k = 0; k < p.degree(); ++k) {
    Rational v = abs(p.coefficients()[k]);
    if (v > best) best = v;
  }
  return 1 + best / lead;
}

/// s, s', then negated remainders; each entry scaled by a positive constant.
inline std::vector<Polynomial> sturm_sequence(const Polynomial& s) {
  std::vector<Polynomial> chain;
  if (s.is_zero()) return chain;
  chain.push_back(s);
  Polynomial next = derivative(s);
  while (!next.is_zero()) {
    chain.push_back(Rational(1) / abs(next.leading()) * next);
    Polynomial r = divmod(chain[chain.size() - 2], chain.back()).second;
    next = -r;
  }
  return chain;
}

inline std::size_t sign_variations(const std::vector<Polynomial>& chain, const Rational& t) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& f : chain) {
    const int sg = sgn(f(t));
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++changes;
    last = sg;
  }
  return changes;
}

/// Number of distinct real roots of the square-free s in (lo, hi].
/// Endpoints must not be roots.
inline std::size_t sturm_count(const std::vector<Polynomial>& chain, const Rational& lo, const Rational& hi) {
  if (chain.empty()) throw InvalidArgument("sturm_count: zero polynomial");
  if (!(lo < hi)) throw InvalidArgument("sturm_count: need lo < hi");
  if (sgn(chain.front()(lo)) == 0 || sgn(chain.front()(hi)) == 0)
    throw InvalidArgument("sturm_count: interval endpoint is a root; perturb the interval");
  const std::size_t vlo = sign_variations(chain, lo);
  const std::size_t vhi = sign_variations(chain, hi);
  return vlo - vhi;
}

inline std::size_t sturm_count(const Polynomial& s, const Rational& lo, const Rational& hi) {
  return sturm_count(sturm_sequence(s), lo, hi);
}

}  // namespace monomat
