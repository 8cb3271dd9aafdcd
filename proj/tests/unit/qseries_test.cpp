#include <gtest/gtest.h>

#include "durfee/error.hpp"
#include "durfee/marked.hpp"
#include "durfee/qseries.hpp"
#include "oracles.hpp"

using namespace durfee;

TEST(QSeries, ParseRational) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(to_string(parse_rational("2/4")), "1/2");
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("x"), Error);
  EXPECT_THROW(parse_rational("1/-2"), Error);
  EXPECT_THROW(parse_rational(""), Error);
}

TEST(QSeries, EvalPointParse) {
  const auto p = EvalPoint::parse("2,1/3,-5");
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(p.x[1], Rational(1, 3));
  EXPECT_THROW(EvalPoint::parse("2,0"), Error);
  EXPECT_THROW(EvalPoint::parse("2,,3"), Error);
}

TEST(QSeries, Arithmetic) {
  const int Q = 8;
  const QSeries g = QSeries::geometric(Q, Rational(2), 1);
  const QSeries one_minus = QSeries::one(Q) - QSeries::monomial(Q, Rational(2), 1);
  EXPECT_EQ(g * one_minus, QSeries::one(Q));
  EXPECT_EQ(one_minus.reciprocal(), g);
  EXPECT_EQ(QSeries::monomial(Q, Rational(1), Q + 1), QSeries(Q));
  EXPECT_THROW(QSeries(Q).reciprocal(), Error);
}

TEST(QSeries, PartitionFunctionInvertsEulerProduct) {
  const int Q = 40;
  EXPECT_EQ(partition_gf(Q) * euler_product(Q), QSeries::one(Q));
  const auto p = oracle::partition_numbers(Q);
  for (int n = 0; n <= Q; ++n) EXPECT_EQ(partition_gf(Q)[static_cast<std::size_t>(n)], Rational(static_cast<long>(p[n])));
}

TEST(QSeries, RankSeriesMatchesBruteForce) {
  const int Q = 30;
  std::vector<std::map<int, std::int64_t>> counts;
  for (int n = 0; n <= Q; ++n) counts.push_back(oracle::rank_counts(n));
  for (int m = -10; m <= 10; ++m) {
    const QSeries s = rank_gf(m, Q);
    for (int n = 1; n <= Q; ++n) {
      const auto it = counts[static_cast<std::size_t>(n)].find(m);
      ASSERT_EQ(s[static_cast<std::size_t>(n)], Rational(it == counts[static_cast<std::size_t>(n)].end() ? 0L : static_cast<long>(it->second)))
          << "m=" << m << " n=" << n;
    }
    EXPECT_EQ(s[0], Rational(0));
  }
}

TEST(QSeries, OddRankSeriesMatchesBruteForce) {
  const int Q = 20;
  for (int m = -10; m <= 10; ++m) {
    const QSeries s = odd_rank_gf(m, Q);
    for (int n = 0; n <= Q; ++n) {
      const auto c = oracle::odd_rank_counts(n);
      const auto it = c.find(m);
      ASSERT_EQ(s[static_cast<std::size_t>(n)], Rational(it == c.end() ? 0L : static_cast<long>(it->second)))
          << "m=" << m << " n=" << n;
    }
  }
}

TEST(QSeries, ThreeFormsAgreeForTwoVariables) {
  const auto x = EvalPoint::parse("2,3");
  for (auto f : {Flavor::Ordinary, Flavor::Odd}) {
    const int Q = f == Flavor::Ordinary ? 12 : 10;
    const QSeries lhs = rk_lhs(x, 2, Q, f);
    EXPECT_EQ(lhs, rk_rhs_corollary11(x, 2, Q, f)) << to_string(f);
    EXPECT_EQ(lhs, rk_rhs_partialfraction(x, 2, Q, f)) << to_string(f);
  }
}

TEST(QSeries, ThreeFormsAgreeForThreeVariables) {
  const auto x = EvalPoint::parse("2,3,5");
  for (auto f : {Flavor::Ordinary, Flavor::Odd}) {
    const QSeries lhs = rk_lhs(x, 3, 10, f);
    EXPECT_EQ(lhs, rk_rhs_corollary11(x, 3, 10, f)) << to_string(f);
    EXPECT_EQ(lhs, rk_rhs_partialfraction(x, 3, 10, f)) << to_string(f);
  }
}

TEST(QSeries, OneVariableProductFormIsTheRankSeriesSum) {
  const auto x = EvalPoint::parse("1/2");
  EXPECT_EQ(rk_lhs(x, 1, 12, Flavor::Ordinary), rk_rhs_corollary11(x, 1, 12, Flavor::Ordinary));
  EXPECT_EQ(rk_lhs(x, 1, 12, Flavor::Odd), rk_rhs_corollary11(x, 1, 12, Flavor::Odd));
}

TEST(QSeries, PoleIsRejected) {
  EXPECT_THROW(rk_rhs_partialfraction(EvalPoint::parse("2,1/2"), 2, 6, Flavor::Ordinary), Error);
  EXPECT_THROW(rk_rhs_partialfraction(EvalPoint::parse("3,3"), 2, 6, Flavor::Ordinary), Error);
}

TEST(QSeries, AllOnesCountsMarkedSymbols) {
  const auto ones = EvalPoint::parse("1,1,1");
  const QSeries s = rk_lhs(ones, 3, 9, Flavor::Ordinary);
  for (int n = 0; n <= 9; ++n)
    EXPECT_EQ(s[static_cast<std::size_t>(n)],
              Rational(static_cast<long>(enumerate_kmarked(n, 3, Flavor::Ordinary).size())));
  // and through the product form
  EXPECT_EQ(s, rk_rhs_corollary11(ones, 3, 9, Flavor::Ordinary));
}

TEST(QSeries, EvaluationPointMustMatchK) {
  EXPECT_THROW(rk_lhs(EvalPoint::parse("2,3"), 3, 6, Flavor::Ordinary), Error);
}
