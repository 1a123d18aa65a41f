#pragma once

#include <monomat/evaluator.hpp>
#include <monomat/monomial.hpp>
#include <monomat/polynomial.hpp>
#include <monomat/rational.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace monomat {

/// Result of deciding whether p(t) >= 0 for all real t >= 0. Nonnegativity on
/// [0, inf) and on (0, inf) coincide for polynomials by continuity.
struct P1Result {
  bool member = true;
  /// Set iff !member; always > 0 with p(witness) < 0.
  std::optional<Rational> witness;

  explicit operator bool() const noexcept { return member; }
};

namespace detail {

inline Polynomial strip_t_factors(const Polynomial& s) {
  if (s.is_zero()) return s;
  const std::size_t low = s.lowest_degree();
  if (low == 0) return s;
  return Polynomial(std::vector<Rational>(s.coefficients().begin() + static_cast<std::ptrdiff_t>(low),
                                          s.coefficients().end()));
}

// Moves t towards lo until neither polynomial vanishes there.
inline Rational avoid_roots(Rational t, const Rational& lo, const Polynomial& p, const Polynomial& s) {
  while (sgn(p(t)) == 0 || sgn(s(t)) == 0) t = (lo + t) / 2;
  return t;
}

}  // namespace detail

/// Decides p in P_1. Outline: sign of the leading coefficient at infinity,
/// sign of the lowest coefficient just right of 0, then a Sturm count of the
/// odd-multiplicity roots (the only places p changes sign) on (0, B] with B
/// the Cauchy bound. A rational witness is located by bisection towards the
/// smallest positive sign change.
inline P1Result in_P1(const Polynomial& p) {
  if (p.is_zero()) return {};
  if (sgn(p.leading()) < 0) return {false, cauchy_bound(p)};
  if (sgn(p.coefficients()[p.lowest_degree()]) < 0) {
    Rational t = 1;
    while (sgn(p(t)) >= 0) t /= 2;
    return {false, t};
  }
  if (p.degree() == 0) return {};

  const Polynomial s = detail::strip_t_factors(squarefree_odd_part(p));
  if (s.degree() == 0) return {};
  const auto chain = sturm_sequence(s);
  const Rational bound = cauchy_bound(p);
  Rational lo = 0;
  Rational hi = bound;
  if (sturm_count(chain, lo, hi) == 0) return {};

  // p > 0 on (0, rho) for the smallest positive odd root rho, and p < 0 just
  // right of it; shrink (lo, hi] around rho until hi lands there.
  while (true) {
    const Rational mid = detail::avoid_roots((lo + hi) / 2, lo, p, s);
    if (sgn(p(mid)) < 0) return {false, mid};
    if (sturm_count(chain, lo, mid) > 0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
}

struct MembershipFailure {
  std::size_t k = 0;  // block order
  std::size_t r = 0;  // residue
  Rational witness;   // > 0, part(p, r, k)(witness) < 0

  friend bool operator==(const MembershipFailure&, const MembershipFailure&) = default;
};

struct MembershipReport {
  std::size_t n = 0;
  bool verdict = true;
  std::vector<MembershipFailure> failures;  // lexicographic (k, r)
};

/// p in P_n^mon iff p_{(r,k)} in P_1 for every k in 1..n and r in 0..k-1.
inline MembershipReport in_Pn_mon(const Polynomial& p, std::size_t n) {
  if (n == 0) throw InvalidArgument("in_Pn_mon: n must be at least 1");
  MembershipReport report{n, true, {}};
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t r = 0; r < k; ++r) {
      const P1Result res = in_P1(part(p, r, k));
      if (!res.member) report.failures.push_back({k, r, *res.witness});
    }
  }
  report.verdict = report.failures.empty();
  return report;
}

struct Counterexample {
  MonomialMatrix matrix;
  std::size_t row = 1;  // 1-based
  std::size_t col = 1;  // 1-based
  Rational value;       // p(matrix) at (row, col), < 0
};

/// For a failure (k, r, t0): A = K_{(t0,..,t0)} of order k has alpha^{1/k} = t0,
/// so p(A) has the entry p_{(r,k)}(t0) < 0 at (1, pi^r(1)).
inline Counterexample counterexample(const Polynomial& p, const MembershipFailure& failure) {
  if (failure.k == 0 || failure.r >= failure.k || sgn(failure.witness) <= 0)
    throw InvalidArgument("counterexample: malformed failure record");
  MonomialMatrix a = k_of(RationalVector(failure.k, failure.witness));
  const DenseMatrix pa = eval_monomial(p, a);
  const std::size_t col = failure.r + 1;
  Rational value = pa(0, col - 1);
  if (sgn(value) >= 0)
    throw Error("counterexample: entry (1, " + std::to_string(col) + ") is not negative; failure record is invalid");
  return {std::move(a), 1, col, std::move(value)};
}

/// The failure used for a single reported counterexample: largest order k,
/// then smallest residue r, so the matrix is as close to order n as possible.
inline const MembershipFailure& preferred_failure(const MembershipReport& report) {
  if (report.failures.empty()) throw InvalidArgument("preferred_failure: report has no failures");
  const MembershipFailure* best = &report.failures.front();
  for (const auto& f : report.failures)
    if (f.k > best->k) best = &f;
  return *best;
}

/// Counterexample for the preferred failure, or nothing when p is in P_n^mon.
inline std::optional<Counterexample> counterexample(const Polynomial& p, std::size_t n) {
  const MembershipReport report = in_Pn_mon(p, n);
  if (report.failures.empty()) return std::nullopt;
  return counterexample(p, preferred_failure(report));
}

}  // namespace monomat
