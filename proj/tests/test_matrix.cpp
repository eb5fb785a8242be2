#include <gtest/gtest.h>

#include <random>

#include "compdet/combinatorics.hpp"
#include "compdet/errors.hpp"
#include "compdet/matrix.hpp"
#include "test_support.hpp"

namespace compdet {
namespace {

constexpr EntryFamily kFamilies[] = {EntryFamily::Binomial, EntryFamily::BinomialBeta, EntryFamily::Power};

Rational binomial_value(const Rational& top, std::uint32_t m) {
  Rational out = 1;
  for (std::uint32_t j = 0; j < m; ++j) out *= (top - j) / Rational(j + 1);
  return out;
}

// Entry value straight from the family definition.
Rational entry_value(EntryFamily f, const Composition& a, const Composition& b, const Assignment& at) {
  const std::size_t k = a.size();
  Rational out = 1;
  for (std::size_t t = 0; t < k; ++t) {
    const Rational base = *at.get(t) + *at.get(k + t) * a[t];
    switch (f) {
      case EntryFamily::Binomial:
        out *= binomial_value(base, b[t]);
        break;
      case EntryFamily::BinomialBeta:
        out *= binomial_value(base + b[t], b[t]);
        break;
      case EntryFamily::Power:
        out *= pow(base, b[t]);
        break;
    }
  }
  return out;
}

Assignment zero_x_unit_lambda(std::int64_t k) {
  Assignment at(static_cast<std::size_t>(2 * k));
  for (std::int64_t t = 0; t < k; ++t) {
    at.set(static_cast<std::size_t>(t), Rational(0));
    at.set(static_cast<std::size_t>(k + t), Rational(1));
  }
  return at;
}

TEST(BuildMatrix, Examples) {
  const auto m = build_matrix(EntryFamily::Binomial, Domain::All, 1, 1);
  ASSERT_EQ(m.order(), 1u);
  EXPECT_EQ(m.entries(0, 0), x_var(1, 1) + lambda_var(1, 1));

  const auto pos = build_matrix(EntryFamily::Binomial, Domain::Positive, 2, 2);
  ASSERT_EQ(pos.order(), 1u);
  EXPECT_EQ(pos.entries(0, 0), (x_var(2, 1) + lambda_var(2, 1)) * (x_var(2, 2) + lambda_var(2, 2)));
}

TEST(BuildMatrix, PowerAtZeroAndUnitLambda) {
  const auto num = build_numeric_matrix(EntryFamily::Power, Domain::All, 2, 2, zero_x_unit_lambda(2));
  const int expected[3][3] = {{4, 0, 0}, {1, 1, 1}, {0, 0, 4}};
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) EXPECT_EQ(num(r, c), Rational(expected[r][c])) << r << c;
  }
  const auto sym = build_matrix(EntryFamily::Power, Domain::All, 2, 2);
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) EXPECT_EQ(sym.entries(r, c).evaluate(zero_x_unit_lambda(2)), expected[r][c]);
  }
}

TEST(BuildMatrix, BinomialAtZeroAndUnitLambdaIsUnitriangular) {
  for (std::int64_t n = 1; n <= 4; ++n) {
    for (std::int64_t k = 1; k <= 3; ++k) {
      const auto m = build_numeric_matrix(EntryFamily::Binomial, Domain::All, n, k, zero_x_unit_lambda(k));
      for (std::size_t r = 0; r < m.order(); ++r) {
        EXPECT_EQ(m(r, r), 1);
        for (std::size_t c = r + 1; c < m.order(); ++c) EXPECT_EQ(m(r, c), 0) << n << k << r << c;
      }
    }
  }
}

TEST(BuildMatrix, SymbolicAndNumericAgreeWithDefinition) {
  std::mt19937_64 rng(29);
  for (auto f : kFamilies) {
    for (Domain d : {Domain::All, Domain::Positive}) {
      for (std::int64_t n = 1; n <= 4; ++n) {
        for (std::int64_t k = 1; k <= 3; ++k) {
          if (d == Domain::Positive && n < k) continue;
          const auto sym = build_matrix(f, d, n, k);
          const auto at = testing::random_assignment(rng, static_cast<std::size_t>(2 * k));
          const auto num = build_numeric_matrix(f, d, n, k, at);
          const auto index = enumerate(n, k, d);
          ASSERT_EQ(sym.index, index);
          for (std::size_t r = 0; r < sym.order(); ++r) {
            for (std::size_t c = 0; c < sym.order(); ++c) {
              const Rational direct = entry_value(f, index[r], index[c], at);
              EXPECT_EQ(num(r, c), direct);
              EXPECT_EQ(sym.entries(r, c).evaluate(at), direct);
              EXPECT_LE(sym.entries(r, c).total_degree(), n);
            }
          }
        }
      }
    }
  }
}

TEST(BuildMatrix, NumericNeedsCompleteAssignment) {
  Assignment partial(4);
  partial.set(0, Rational(1));
  EXPECT_THROW(build_numeric_matrix(EntryFamily::Power, Domain::All, 2, 2, partial), ContextError);
}

TEST(BuildMatrix, PowerZeroToTheZeroIsOne) {
  // Index (0,1), (1,0); the (1,0),(1,0) entry is (0 + 1)^1 (0 + 0)^0.
  const auto m = build_numeric_matrix(EntryFamily::Power, Domain::All, 1, 2, zero_x_unit_lambda(2));
  EXPECT_EQ(m(1, 1), 1);
  EXPECT_EQ(m(0, 1), 0);
  const auto sym = build_matrix(EntryFamily::Power, Domain::All, 1, 2);
  EXPECT_EQ(sym.entries(1, 1), x_var(2, 1) + lambda_var(2, 1));
}

TEST(Substitution, ImagesAndAssignments) {
  const auto images = substitution_images(Substitution::ScalarLambda, 3);
  ASSERT_EQ(images.size(), 6u);
  EXPECT_EQ(images[5], lambda_var(3, 1));
  EXPECT_EQ(images[1], x_var(3, 2));

  Assignment at(4);
  at.set("x1", Rational(2));
  at.set("x2", Rational(3));
  at.set("l1", Rational(5));
  at.set("l2", Rational(7));
  const auto pushed = apply_substitution(Substitution::UnitLambdaSingleX, at);
  EXPECT_EQ(*pushed.get(1), Rational(2));
  EXPECT_EQ(*pushed.get(3), Rational(1));
}

TEST(Family, NamesRoundTrip) {
  for (auto f : kFamilies) EXPECT_EQ(parse_family(to_string(f)), f);
  EXPECT_THROW(parse_family("NOPE"), ParameterError);
  EXPECT_EQ(parse_domain(to_string(Domain::Positive)), Domain::Positive);
}

}  // namespace
}  // namespace compdet
