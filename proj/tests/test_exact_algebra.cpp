#include <functional>
#include <random>

#include <gtest/gtest.h>

#include "bruhat_rook/laurent_poly.hpp"
#include "bruhat_rook/q_numbers.hpp"

using namespace bruhat_rook;

namespace {

LaurentPoly P(int e, std::initializer_list<int> c) { return LaurentPoly(e, c); }

// Set partitions of {1..n} into k blocks by restricted growth strings.
BigInt count_set_partitions(int n, int k) {
  BigInt count = 0;
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int blocks) {
    if (i == n) {
      if (blocks == k) ++count;
      return;
    }
    for (int b = 0; b <= blocks && b < k; ++b) rec(i + 1, std::max(blocks, b + 1));
  };
  if (n == 0) return k == 0 ? 1 : 0;
  rec(0, 0);
  return count;
}

LaurentPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> len(0, 4), exp(-3, 3), coef(-5, 5);
  std::vector<BigInt> c(static_cast<std::size_t>(len(rng)));
  for (auto& x : c) x = coef(rng);
  return LaurentPoly(exp(rng), std::move(c));
}

}  // namespace

TEST(LaurentPoly, CanonicalForm) {
  LaurentPoly p(-2, std::vector<BigInt>{0, 0, 1, 2, 0});
  EXPECT_EQ(p.min_exp(), 0);
  EXPECT_EQ(p.max_exp(), 1);
  EXPECT_EQ(p.coeffs().size(), 2u);
  LaurentPoly z(5, std::vector<BigInt>{0, 0});
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.min_exp(), 0);
  EXPECT_EQ(z, LaurentPoly{});
}

TEST(LaurentPoly, Printing) {
  EXPECT_EQ(P(0, {1, 3, 5}).to_string(), "1 + 3q + 5q^2");
  EXPECT_EQ(q_int(-1).to_string(), "-q^-1");
  EXPECT_EQ(LaurentPoly{}.to_string(), "0");
}

TEST(LaurentPoly, RingAxiomsOnRandomPolys) {
  std::mt19937 rng(7);
  for (int t = 0; t < 300; ++t) {
    const auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a * LaurentPoly(1), a);
    EXPECT_EQ(evaluate_at_one(a * b), evaluate_at_one(a) * evaluate_at_one(b));
  }
}

TEST(LaurentPoly, JsonRoundTrip) {
  const auto p = P(-2, {3, 0, -7});
  const auto text = to_json_string(p);
  EXPECT_EQ(text, R"({"min_exp":-2,"coeffs":["3","0","-7"]})");
  EXPECT_EQ(laurent_from_json_string(text), p);
  EXPECT_EQ(to_json_string(LaurentPoly{}), R"({"min_exp":0,"coeffs":["0"]})");
  EXPECT_TRUE(laurent_from_json_string(R"({"min_exp":0,"coeffs":["0"]})").is_zero());
  BigInt big = 1;
  for (int i = 0; i < 40; ++i) big *= 1000003;
  const LaurentPoly huge = LaurentPoly::monomial(4, big);
  EXPECT_EQ(laurent_from_json_string(to_json_string(huge)), huge);
}

TEST(LaurentPoly, JsonRejectsNonCanonical) {
  EXPECT_THROW(laurent_from_json_string(R"({"min_exp":0,"coeffs":["0","1"]})"), ParseError);
  EXPECT_THROW(laurent_from_json_string(R"({"min_exp":0,"coeffs":["1","0"]})"), ParseError);
  EXPECT_THROW(laurent_from_json_string(R"({"min_exp":0,"coeffs":["1x"]})"), ParseError);
  EXPECT_THROW(laurent_from_json_string(R"({"coeffs":["1"]})"), ParseError);
  EXPECT_THROW(laurent_from_json_string("not json"), ParseError);
}

TEST(LaurentPoly, Substitutions) {
  EXPECT_EQ(substitute_q_inverse(P(0, {1, 1})), P(-1, {1, 1}));
  EXPECT_EQ(substitute_q_inverse(LaurentPoly(7)), LaurentPoly(7));
  EXPECT_EQ(substitute_q_power(P(0, {1, 1}), 2), P(0, {1, 0, 1}));
  EXPECT_EQ(evaluate_at_one(P(-1, {1, 1, 2})), 4);
  EXPECT_EQ(evaluate_at_one(LaurentPoly{}), 0);
}

TEST(BiPoly, ArithmeticAndReversal) {
  const BiPoly a = BiPoly::monomial(0, 0) + BiPoly::monomial(1, 1);
  EXPECT_EQ((a * a).coeff(1), P(1, {2}));
  EXPECT_EQ(a.reversed_t(1), BiPoly::monomial(1, 0) + BiPoly::monomial(0, 1));
  EXPECT_THROW(a.reversed_t(0), RangeError);
  EXPECT_TRUE(BiPoly{}.is_zero());
}

TEST(QNumbers, QInt) {
  EXPECT_TRUE(q_int(0).is_zero());
  EXPECT_EQ(q_int(3), P(0, {1, 1, 1}));
  EXPECT_EQ(q_int(-1), P(-1, {-1}));
  const LaurentPoly one_minus_q = P(0, {1, -1});
  for (int m = -8; m <= 8; ++m) {
    // (1 - q) [m]_q = 1 - q^m
    EXPECT_EQ(q_int(m) * one_minus_q, LaurentPoly(1) - LaurentPoly::monomial(m)) << m;
    if (m > 0) {
      EXPECT_EQ(q_int(-m), -(q_int(m).shifted(-m))) << m;
    }
  }
}

TEST(QNumbers, QFactorialAndFalling) {
  EXPECT_EQ(q_factorial(0), LaurentPoly(1));
  EXPECT_EQ(q_factorial(2), P(0, {1, 1}));
  EXPECT_EQ(q_factorial(3), P(0, {1, 2, 2, 1}));
  EXPECT_EQ(q_falling(5, 0), LaurentPoly(1));
  EXPECT_TRUE(q_falling(0, 1).is_zero());
  EXPECT_EQ(q_falling(2, 2), P(0, {1, 1}));
  EXPECT_THROW(q_factorial(-1), RangeError);
  for (int i = 0; i <= 8; ++i) {
    EXPECT_EQ(substitute_q_inverse(q_factorial(i)).shifted(i * (i - 1) / 2), q_factorial(i)) << i;
    EXPECT_EQ(evaluate_at_one(q_factorial(i)), factorial(i));
  }
}

TEST(QNumbers, QStirling) {
  EXPECT_EQ(q_stirling(0, 0), LaurentPoly(1));
  EXPECT_EQ(q_stirling(2, 2), P(1, {1}));
  EXPECT_EQ(q_stirling(3, 2), P(1, {2, 1}));
  EXPECT_TRUE(q_stirling(3, 0).is_zero());
  EXPECT_TRUE(q_stirling(3, 4).is_zero());
  EXPECT_TRUE(q_stirling(3, -1).is_zero());
  EXPECT_THROW(q_stirling(-1, 0), RangeError);
  // recurrence S_{n+1,k} = q^{k-1} S_{n,k-1} + [k]_q S_{n,k}
  for (int n = 0; n < 10; ++n)
    for (int k = 1; k <= n + 1; ++k)
      EXPECT_EQ(q_stirling(n + 1, k), q_stirling(n, k - 1).shifted(k - 1) + q_int(k) * q_stirling(n, k));
}

TEST(QNumbers, StirlingAgainstSetPartitions) {
  EXPECT_EQ(stirling2(3, 2), 3);
  EXPECT_EQ(stirling2(4, 2), 7);
  for (int n = 0; n <= 8; ++n) {
    EXPECT_EQ(stirling2(n, n), 1);
    for (int k = 0; k <= n; ++k) {
      EXPECT_EQ(stirling2(n, k), count_set_partitions(n, k)) << n << "," << k;
      EXPECT_EQ(evaluate_at_one(q_stirling(n, k)), stirling2(n, k));
    }
  }
}

TEST(QNumbers, PolyBernoulli) {
  EXPECT_EQ(poly_bernoulli(1, -1), 2);
  // standard array: the count 14 of [id,3412] sits at (n,k) = (2,2)
  EXPECT_EQ(poly_bernoulli(2, -2), 14);
  EXPECT_EQ(poly_bernoulli(4, -2), 146);
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(poly_bernoulli(n, 0), 1);
  // first rows of the array B_n^{-k}
  const int row2[] = {1, 4, 14, 46, 146};
  for (int k = 0; k < 5; ++k) EXPECT_EQ(poly_bernoulli(2, -k), row2[k]);
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= 8; ++k) EXPECT_EQ(poly_bernoulli(n, -k), poly_bernoulli(k, -n));
  // B_n^{-1} = 2^n
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(poly_bernoulli(n, -1), BigInt(1) << n);
  EXPECT_THROW(poly_bernoulli(2, 1), UnsupportedArgument);
  EXPECT_THROW(poly_bernoulli(-1, 0), RangeError);
}
