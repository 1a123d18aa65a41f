#pragma once

#include <monomat/evaluator.hpp>
#include <monomat/monomial.hpp>
#include <monomat/oracle.hpp>
#include <monomat/polynomial.hpp>

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <string>

namespace monomat::bench {

struct BenchRow {
  std::size_t n = 0;
  std::size_t m = 0;
  double t_closed_form = 0;  // seconds
  double t_dense = 0;        // seconds
  double speedup() const { return t_closed_form > 0 ? t_dense / t_closed_form : 0; }
};

struct BenchInput {
  Polynomial p;
  MonomialMatrix a;
};

/// Random nonnegative monomial matrix of order n and a degree-m polynomial with
/// coefficients in [0, 9], both derived from `seed`.
inline BenchInput make_input(std::size_t n, std::size_t m, std::uint64_t seed, std::uint64_t value_bound) {
  oracle::SplitMix64 rng(seed ^ 0xB5AD4ECEDA1CE2A9ULL);
  Polynomial p = oracle::random_polynomial(rng, m, 0, 9);
  return {std::move(p), oracle::random_monomial(seed, n, value_bound)};
}

/// Times both evaluators once each and throws if the outputs differ.
inline BenchRow run_case(const BenchInput& input) {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  const DenseMatrix closed = eval_monomial(input.p, input.a);
  const auto t1 = clock::now();
  const DenseMatrix dense = oracle::dense_horner_eval(input.p, to_dense(input.a));
  const auto t2 = clock::now();
  if (!(closed == dense))
    throw Error("bench: closed form and dense Horner disagree at n=" + std::to_string(input.a.size()) +
                ", m=" + std::to_string(input.p.is_zero() ? 0 : input.p.degree()));
  BenchRow row;
  row.n = input.a.size();
  row.m = input.p.is_zero() ? 0 : input.p.degree();
  row.t_closed_form = std::chrono::duration<double>(t1 - t0).count();
  row.t_dense = std::chrono::duration<double>(t2 - t1).count();
  return row;
}

}  // namespace monomat::bench
