#include "test_support.hpp"

#include <gtest/gtest.h>

namespace monomat {
namespace {

using testing::dense;
using testing::vec;

Polynomial P(const char* text) { return parse_polynomial(text); }

const char* kExample = "t^20 + 4*t^15 + 2*t^8 + 3*t^2 + t + 5";

TEST(Evaluator, ExampleBlockCoefficients) {
  const BlockCoefficients c = block_coefficients(P(kExample), vec({"3", "5", "2", "1"}));
  ASSERT_EQ(c.size(), 4u);
  EXPECT_EQ(c.c[0], 24301805);  // 30^5 + 2*30^2 + 5
  EXPECT_EQ(c.c[1], 1);
  EXPECT_EQ(c.c[2], 3);
  // a_15 = 4 contributes 4 * 30^3; an independent sympy solve of
  // p(A) = c0 I + c1 A + c2 A^2 + c3 A^3 gives the same 108000.
  EXPECT_EQ(c.c[3], 108000);
}

TEST(Evaluator, ExampleMatrix) {
  const RationalVector x = vec({"3", "5", "2", "1"});
  // Frozen from an independent dense computation.
  const DenseMatrix expected = dense(4, {24301805, 3, 45, 3240000, 1080000, 24301805, 5, 30, 6, 648000, 24301805, 2,
                                         1, 9, 1620000, 24301805});
  EXPECT_EQ(eval_k(P(kExample), x), expected);
  EXPECT_EQ(oracle::dense_horner_eval(P(kExample), to_dense(k_of(x))), expected);
  const DenseMatrix a = to_dense(k_of(x));
  DenseMatrix expansion = Rational(24301805) * DenseMatrix::identity(4);
  expansion += a;
  expansion += Rational(3) * oracle::dense_power(a, 2);
  expansion += Rational(108000) * oracle::dense_power(a, 3);
  EXPECT_EQ(expansion, expected);
}

TEST(Evaluator, ConstantAndIdentityPolynomials) {
  const RationalVector x = vec({"2", "-1/3", "7"});
  const BlockCoefficients c = block_coefficients(P("9/2"), x);
  EXPECT_EQ(c.c, vec({"9/2", "0", "0"}));
  EXPECT_EQ(eval_k(P("t"), x), to_dense(k_of(x)));
  EXPECT_EQ(eval_k(Polynomial{}, x), DenseMatrix(3, 3));
  EXPECT_THROW(block_coefficients(P("t"), vec({"1", "0"})), InvalidArgument);
}

TEST(Evaluator, RadicalIdentityHandExample) {
  // x = (2, 2), alpha = 4, beta = 2, p = t^2 + t + 1
  const BlockCoefficients c = block_coefficients(P("t^2 + t + 1"), vec({"2", "2"}));
  EXPECT_EQ(c.c, vec({"5", "1"}));
  EXPECT_EQ(c.c[1] * 2, part(P("t^2 + t + 1"), 1, 2)(2));
}

TEST(Evaluator, ScalarCase) {
  const Polynomial p = P("3*t^4 - t + 2/5");
  const DenseMatrix v = eval_k(p, vec({"-3/2"}));
  EXPECT_EQ(v(0, 0), p(Rational(-3, 2)));
}

TEST(Evaluator, MonomialExamples) {
  const MonomialMatrix a(vec({"2", "3", "4"}), Permutation({1, 3, 2}));
  EXPECT_EQ(eval_monomial(P("t^2"), a), dense(3, {4, 0, 0, 0, 12, 0, 0, 0, 12}));
  const StructuredEvaluation ev = eval_structured(P("t^2"), a);
  ASSERT_EQ(ev.coefficients.size(), 2u);
  EXPECT_EQ(ev.coefficients[1].c, vec({"12", "0"}));

  const RationalVector x = vec({"3", "5", "2", "1"});
  EXPECT_EQ(eval_monomial(P(kExample), k_of(x)), eval_k(P(kExample), x));
}

class EvaluatorProperty : public ::testing::Test {
 protected:
  oracle::SplitMix64 rng{4242};
};

TEST_F(EvaluatorProperty, MatchesDenseHorner) {
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng.below(8);
    const MonomialMatrix a(testing::random_nonzero_vector(rng, n, 4), oracle::random_permutation(rng, n));
    const Polynomial p = testing::random_rational_polynomial(rng, rng.below(41), 6, 3);
    ASSERT_EQ(eval_monomial(p, a), oracle::dense_horner_eval(p, to_dense(a))) << "trial " << trial;
  }
}

TEST_F(EvaluatorProperty, Linearity) {
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.below(7);
    const MonomialMatrix a(testing::random_nonzero_vector(rng, n, 5), oracle::random_permutation(rng, n));
    const Polynomial p = testing::random_rational_polynomial(rng, rng.below(20), 9, 4);
    const Polynomial r = testing::random_rational_polynomial(rng, rng.below(20), 9, 4);
    ASSERT_EQ(eval_monomial(p + r, a), eval_monomial(p, a) + eval_monomial(r, a));
  }
}

TEST_F(EvaluatorProperty, RadicalIdentityOnConstantVectors) {
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng.below(8);
    Rational beta = oracle::random_positive_rational(rng, 7);
    if (rng.below(2)) beta = -beta;
    const RationalVector x(n, beta);
    const Polynomial p = testing::random_rational_polynomial(rng, rng.below(30), 9, 4);
    const BlockCoefficients c = block_coefficients(p, x);
    for (std::size_t r = 0; r < n; ++r) ASSERT_EQ(c.c[r] * pow(beta, r), part(p, r, n)(beta));
  }
}

TEST_F(EvaluatorProperty, CoefficientsReproduceBlockPolynomial) {
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.below(6);
    const RationalVector x = testing::random_nonzero_vector(rng, n, 5);
    const Polynomial p = testing::random_rational_polynomial(rng, rng.below(25), 9, 4);
    const BlockCoefficients c = block_coefficients(p, x);
    DenseMatrix sum(n, n);
    for (std::size_t r = 0; r < n; ++r) sum += c.c[r] * to_dense(power_primitive(x, r));
    ASSERT_EQ(sum, oracle::dense_horner_eval(p, to_dense(k_of(x))));
  }
}

}  // namespace
}  // namespace monomat
