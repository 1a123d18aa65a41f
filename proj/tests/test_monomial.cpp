#include "test_support.hpp"

#include <gtest/gtest.h>

namespace monomat {
namespace {

using testing::dense;
using testing::q;
using testing::vec;

const DenseMatrix kExampleA = dense(4, {0, 3, 0, 0, 0, 0, 5, 0, 0, 0, 0, 2, 1, 0, 0, 0});

TEST(Monomial, KOf) {
  const RationalVector x = vec({"2", "-3", "1/5"});
  DenseMatrix expected(3, 3);
  expected(0, 1) = x[0];
  expected(1, 2) = x[1];
  expected(2, 0) = x[2];
  EXPECT_EQ(to_dense(k_of(x)), expected);
  EXPECT_EQ(to_dense(k_of(vec({"3", "5", "2", "1"}))), kExampleA);
  EXPECT_EQ(to_dense(k_of(vec({"1"}))), DenseMatrix::identity(1));
  EXPECT_THROW(k_of(vec({"1", "0"})), InvalidArgument);
}

TEST(Monomial, Alpha) {
  EXPECT_EQ(alpha(vec({"3", "5", "2", "1"})), 30);
  EXPECT_EQ(alpha(vec({"1", "1", "1"})), 1);
  EXPECT_EQ(alpha(vec({"2", "1/2"})), 1);
}

TEST(Monomial, FromDense) {
  const MonomialMatrix id = from_dense(DenseMatrix::identity(3));
  EXPECT_EQ(id.values(), vec({"1", "1", "1"}));
  EXPECT_EQ(id.perm(), Permutation::identity(3));

  const MonomialMatrix a = from_dense(kExampleA);
  EXPECT_EQ(a.values(), vec({"3", "5", "2", "1"}));
  EXPECT_EQ(a.perm(), Permutation::cyclic(4));
  EXPECT_TRUE(a.is_nonnegative());
}

TEST(Monomial, FromDenseRejectsNonMonomial) {
  DenseMatrix two_in_row = DenseMatrix::identity(3);
  two_in_row(0, 2) = 4;
  try {
    from_dense(two_in_row);
    FAIL() << "expected NotMonomial";
  } catch (const NotMonomial& e) {
    EXPECT_EQ(e.row(), 1u);
  }
  DenseMatrix zero_row = DenseMatrix::identity(3);
  zero_row(1, 1) = 0;
  try {
    from_dense(zero_row);
    FAIL() << "expected NotMonomial";
  } catch (const NotMonomial& e) {
    EXPECT_EQ(e.row(), 2u);
  }
  // one nonzero per row but a repeated column
  EXPECT_THROW(from_dense(dense(2, {1, 0, 2, 0})), NotMonomial);
  EXPECT_THROW(from_dense(DenseMatrix(2, 3)), DimensionMismatch);
}

TEST(Monomial, ToDenseSingleton) {
  const MonomialMatrix a(vec({"-7/3"}), Permutation::identity(1));
  DenseMatrix expected(1, 1);
  expected(0, 0) = q("-7/3");
  EXPECT_EQ(to_dense(a), expected);
}

TEST(Monomial, Multiply) {
  const MonomialMatrix a = k_of(vec({"3", "5", "2", "1"}));
  EXPECT_EQ(multiply(a, MonomialMatrix::identity(4)), a);
  EXPECT_EQ(to_dense(multiply(a, a)), oracle::dense_multiply(kExampleA, kExampleA));
  EXPECT_THROW(multiply(a, MonomialMatrix::identity(3)), DimensionMismatch);
}

TEST(Monomial, FrobeniusNormalFormExamples) {
  const RationalVector x = vec({"3", "-5", "2/7"});
  FrobeniusForm f = frobenius_normal_form(k_of(x));
  EXPECT_EQ(f.gamma, Permutation::identity(3));
  ASSERT_EQ(f.blocks.size(), 1u);
  EXPECT_EQ(f.blocks[0], x);

  f = frobenius_normal_form(MonomialMatrix(vec({"5"}), Permutation::identity(1)));
  ASSERT_EQ(f.blocks.size(), 1u);
  EXPECT_EQ(f.blocks[0], vec({"5"}));

  f = frobenius_normal_form(MonomialMatrix(vec({"7", "2", "9"}), Permutation({1, 3, 2})));
  ASSERT_EQ(f.blocks.size(), 2u);
  EXPECT_EQ(f.blocks[0], vec({"7"}));
  EXPECT_EQ(f.blocks[1], vec({"2", "9"}));
}

TEST(Monomial, PowerPrimitiveExamples) {
  const RationalVector x = vec({"3", "5", "2", "1"});
  EXPECT_EQ(power_primitive(x, 0), MonomialMatrix::identity(4));
  EXPECT_EQ(to_dense(power_primitive(x, 4)), 30 * DenseMatrix::identity(4));
  // A^7: frozen from an independent dense computation.
  const DenseMatrix a7 = dense(4, {0, 0, 0, 900, 300, 0, 0, 0, 0, 180, 0, 0, 0, 0, 450, 0});
  EXPECT_EQ(to_dense(power_primitive(x, 7)), a7);
  EXPECT_EQ(oracle::dense_power(kExampleA, 7), a7);
  // 30 * D_x D_{pi(x)} D_{pi^2(x)} C^3
  const Permutation pi = Permutation::cyclic(4);
  DenseMatrix factored = 30 * DenseMatrix::identity(4);
  RationalVector shifted = x;
  for (int t = 0; t < 3; ++t) {
    factored = oracle::dense_multiply(factored, DenseMatrix::diagonal(shifted));
    shifted = permute(pi, shifted);
  }
  factored = oracle::dense_multiply(factored, oracle::dense_power(to_matrix(pi), 3));
  EXPECT_EQ(to_dense(power_primitive(x, 7)), factored);
  EXPECT_THROW(power_primitive(vec({"1", "0"}), 3), InvalidArgument);
}

TEST(Monomial, PowerExamples) {
  const MonomialMatrix a = from_dense(kExampleA);
  EXPECT_EQ(power(a, 1), a);
  EXPECT_EQ(power(a, 0), MonomialMatrix::identity(4));
  EXPECT_EQ(to_dense(power(a, 20)), pow(Rational(30), 5) * DenseMatrix::identity(4));
  EXPECT_EQ(oracle::dense_power(kExampleA, 20), pow(Rational(30), 5) * DenseMatrix::identity(4));
}

class MonomialProperty : public ::testing::Test {
 protected:
  oracle::SplitMix64 rng{777};
};

TEST_F(MonomialProperty, DenseRoundTrip) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const MonomialMatrix a = oracle::random_monomial(seed, 1 + seed % 10, 12);
    ASSERT_EQ(from_dense(to_dense(a)), a);
  }
}

TEST_F(MonomialProperty, ClosureUnderProduct) {
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng.below(8);
    const MonomialMatrix a(testing::random_nonzero_vector(rng, n, 7), oracle::random_permutation(rng, n));
    const MonomialMatrix b(testing::random_nonzero_vector(rng, n, 7), oracle::random_permutation(rng, n));
    const MonomialMatrix ab = multiply(a, b);
    ASSERT_EQ(to_dense(ab), oracle::dense_multiply(to_dense(a), to_dense(b)));
    ASSERT_EQ(alpha(ab.values()), alpha(a.values()) * alpha(b.values()));
  }
}

TEST_F(MonomialProperty, FrobeniusReconstruction) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const MonomialMatrix a = oracle::random_monomial(seed, 1 + seed % 12, 9);
    const FrobeniusForm f = frobenius_normal_form(a);
    std::vector<DenseMatrix> blocks;
    for (const auto& y : f.blocks) blocks.push_back(to_dense(k_of(y)));
    const DenseMatrix q = to_matrix(f.gamma);
    ASSERT_EQ(oracle::dense_multiply(oracle::dense_multiply(q, direct_sum(blocks)), q.transpose()), to_dense(a));
    ASSERT_EQ(f.blocks.size(), cycle_decomposition(a.perm()).sizes.size());
  }
}

TEST_F(MonomialProperty, PrimitivePowerMatchesDenseAndRemark) {
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng.below(8);
    const RationalVector x = testing::random_nonzero_vector(rng, n, 5);
    const DenseMatrix k = to_dense(k_of(x));
    DenseMatrix dense_pow = DenseMatrix::identity(n);
    for (unsigned long j = 0; j <= 100; ++j) {
      ASSERT_EQ(to_dense(power_primitive(x, j)), dense_pow) << "n=" << n << " j=" << j;
      // K_x^j = alpha^q K_x^r
      ASSERT_EQ(to_dense(power_primitive(x, j)), pow(alpha(x), j / n) * to_dense(power_primitive(x, j % n)));
      dense_pow = oracle::dense_multiply(dense_pow, k);
    }
  }
}

TEST_F(MonomialProperty, GeneralPowerMatchesDense) {
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng.below(8);
    const MonomialMatrix a(testing::random_nonzero_vector(rng, n, 5), oracle::random_permutation(rng, n));
    const unsigned long j = rng.below(65);
    ASSERT_EQ(to_dense(power(a, j)), oracle::dense_power(to_dense(a), j));
  }
}

TEST(Monomial, OrbitProductsTable) {
  const RationalVector x = vec({"2", "3", "5"});
  const auto table = orbit_products(x);
  ASSERT_EQ(table.size(), 3u);
  EXPECT_EQ(table[0], vec({"1", "1", "1"}));
  EXPECT_EQ(table[1], vec({"2", "3", "5"}));
  EXPECT_EQ(table[2], vec({"6", "15", "10"}));
  for (std::size_t r = 0; r < 3; ++r) EXPECT_EQ(orbit_product(x, r), table[r]);
}

}  // namespace
}  // namespace monomat
