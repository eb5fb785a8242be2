#include <gtest/gtest.h>

#include "compdet/errors.hpp"
#include "compdet/exactnum.hpp"

namespace compdet {
namespace {

TEST(Rational, ParsesAndNormalizes) {
  EXPECT_EQ(parse_rational("4/6"), Rational(2, 3));
  EXPECT_EQ(parse_rational("-3"), Rational(-3));
  EXPECT_EQ(parse_rational("0/5"), Rational(0));
  EXPECT_EQ(to_string(parse_rational("0/5")), "0");
  EXPECT_EQ(to_string(Rational(-7, 2)), "-7/2");
}

TEST(Rational, RejectsMalformedInput) {
  EXPECT_THROW(parse_rational("1/0"), ParameterError);
  EXPECT_THROW(parse_rational("abc"), ParameterError);
  EXPECT_THROW(parse_rational(""), ParameterError);
  EXPECT_THROW(parse_rational("1/2/3"), ParameterError);
  EXPECT_THROW(parse_rational("3/-6"), ParameterError);
}

TEST(Rational, DenominatorStaysPositive) {
  const Rational r = Rational(3) / Rational(-9);
  EXPECT_GT(r.get_den(), 0);
  EXPECT_EQ(r, Rational(-1, 3));
}

TEST(CountingBinomial, UsesSetCountingConvention) {
  EXPECT_EQ(counting_binomial(5, 3), 10);
  EXPECT_EQ(counting_binomial(-1, 1), 0);
  EXPECT_EQ(counting_binomial(3, -1), 0);
  EXPECT_EQ(counting_binomial(3, 5), 0);
  EXPECT_EQ(counting_binomial(-1, -1), 0);
  EXPECT_EQ(counting_binomial(0, 0), 1);
  EXPECT_EQ(counting_binomial(60, 30), Integer("118264581564861424"));
}

TEST(CompositionCount, MatchesBinomialForPositiveLength) {
  for (std::int64_t m = 0; m <= 8; ++m) {
    for (std::int64_t p = 1; p <= 5; ++p) EXPECT_EQ(composition_count(m, p), counting_binomial(m + p - 1, p - 1));
  }
  EXPECT_EQ(composition_count(0, 0), 1);
  EXPECT_EQ(composition_count(2, 0), 0);
  EXPECT_EQ(composition_count(-1, 3), 0);
}

TEST(Factorial, SmallValues) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(5), 120);
  EXPECT_EQ(factorial(20), Integer("2432902008176640000"));
}

TEST(Pow, IntegerAndRational) {
  EXPECT_EQ(pow(Integer(3), 7), 2187);
  EXPECT_EQ(pow(Rational(-1, 2), 3), Rational(-1, 8));
  EXPECT_EQ(pow(Rational(0), 0), Rational(1));
}

TEST(ToU64, RejectsNegativeAndHuge) {
  EXPECT_EQ(to_u64(Integer(42)), 42u);
  EXPECT_THROW(to_u64(Integer(-1)), ParameterError);
  EXPECT_THROW(to_u64(Integer("100000000000000000000000")), ParameterError);
}

}  // namespace
}  // namespace compdet
