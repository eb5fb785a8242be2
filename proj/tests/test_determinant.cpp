#include <gtest/gtest.h>

#include <random>

#include "compdet/determinant.hpp"
#include "compdet/errors.hpp"
#include "test_support.hpp"

namespace compdet {
namespace {

using testing::leibniz_determinant;

SquareMatrix<Rational> rational_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  SquareMatrix<Rational> m(rows.size(), Rational(0));
  std::size_t r = 0;
  for (const auto& row : rows) {
    std::size_t c = 0;
    for (long v : row) m(r, c++) = Rational(v);
    ++r;
  }
  return m;
}

Assignment zero_x_unit_lambda(std::int64_t k) {
  Assignment at(static_cast<std::size_t>(2 * k));
  for (std::int64_t t = 0; t < k; ++t) {
    at.set(static_cast<std::size_t>(t), Rational(0));
    at.set(static_cast<std::size_t>(k + t), Rational(1));
  }
  return at;
}

struct MatrixKind {
  EntryFamily family;
  Domain domain;
  Substitution substitution;
};

// alpha^beta, (x + alpha)^beta, C(x + l alpha, beta), C(x + l alpha + beta, beta),
// (x + l alpha)^beta, and C(x + l alpha, beta) over positive compositions.
constexpr MatrixKind kSixFamilies[] = {
    {EntryFamily::Power, Domain::All, Substitution::ZeroXUnitLambda},
    {EntryFamily::Power, Domain::All, Substitution::UnitLambda},
    {EntryFamily::Binomial, Domain::All, Substitution::None},
    {EntryFamily::BinomialBeta, Domain::All, Substitution::None},
    {EntryFamily::Power, Domain::All, Substitution::None},
    {EntryFamily::Binomial, Domain::Positive, Substitution::None},
};

TEST(Determinant, SmallExamples) {
  const auto m = rational_matrix({{1, 2}, {3, 4}});
  EXPECT_EQ(det_bareiss(m), -2);
  EXPECT_EQ(det_laplace(m), -2);

  SquareMatrix<Rational> id(5, Rational(0));
  for (std::size_t i = 0; i < 5; ++i) id(i, i) = 1;
  EXPECT_EQ(det_bareiss(id), 1);
  EXPECT_EQ(det_laplace(id), 1);

  EXPECT_EQ(det_bareiss(rational_matrix({{1, 1}, {1, 1}})), 0);
  EXPECT_EQ(det_bareiss(rational_matrix({{0, 1, 2}, {0, 3, 4}, {0, 5, 7}})), 0);
  EXPECT_EQ(det_bareiss(rational_matrix({{0, 1}, {1, 0}})), -1);
}

TEST(Determinant, LaplaceIsCapped) {
  SquareMatrix<Rational> big(9, Rational(1));
  EXPECT_THROW(det_laplace(big), SizeError);
  EXPECT_NO_THROW(det_bareiss(big));
}

TEST(Determinant, PointValuesAgainstPermutationSum) {
  const auto m22 = build_numeric_matrix(EntryFamily::Power, Domain::All, 2, 2, zero_x_unit_lambda(2));
  EXPECT_EQ(leibniz_determinant(m22, Rational(0), Rational(1)), 16);
  EXPECT_EQ(det_bareiss(m22), 16);
  EXPECT_EQ(det_laplace(m22), 16);

  const auto m32 = build_numeric_matrix(EntryFamily::Power, Domain::All, 3, 2, zero_x_unit_lambda(2));
  EXPECT_EQ(leibniz_determinant(m32, Rational(0), Rational(1)), 8748);
  EXPECT_EQ(det_bareiss(m32), 8748);
  EXPECT_EQ(det_numeric(EntryFamily::Power, Domain::All, 3, 2, zero_x_unit_lambda(2)), 8748);
}

TEST(Determinant, BinomialAtZeroAndUnitLambdaIsOne) {
  for (std::int64_t n = 1; n <= 5; ++n) {
    for (std::int64_t k = 1; k <= 5; ++k) {
      EXPECT_EQ(det_numeric(EntryFamily::Binomial, Domain::All, n, k, zero_x_unit_lambda(k)), 1) << n << " " << k;
    }
  }
}

TEST(Determinant, RandomIntegerMatricesAgreeWithLaplace) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t order = 2 + static_cast<std::size_t>(trial % 5);
    SquareMatrix<Rational> m(order, Rational(0));
    for (std::size_t r = 0; r < order; ++r) {
      for (std::size_t c = 0; c < order; ++c) {
        // Plenty of zeros so that pivot exchanges get exercised.
        m(r, c) = rng() % 3 == 0 ? Rational(0) : Rational(static_cast<long>(rng() % 19) - 9);
      }
    }
    const Rational expected = leibniz_determinant(m, Rational(0), Rational(1));
    EXPECT_EQ(det_laplace(m), expected);
    EXPECT_EQ(det_bareiss(m), expected) << "trial " << trial;
  }
}

TEST(Determinant, SymbolicFamiliesAgreeWithLaplace) {
  for (const auto& kind : kSixFamilies) {
    for (auto [n, k] : {std::pair{1, 1}, std::pair{2, 2}, std::pair{1, 3}}) {
      if (kind.domain == Domain::Positive && n < k) continue;
      const auto built = build_matrix(kind.family, kind.domain, n, k);
      const auto m = substitute_entries(built.entries, kind.substitution, k);
      const auto bareiss = det_bareiss(m);
      EXPECT_EQ(bareiss, det_laplace(m)) << to_string(kind.family) << " " << n << " " << k;
      const Polynomial zero(m(0, 0).num_variables());
      EXPECT_EQ(bareiss, leibniz_determinant(m, zero, Polynomial::constant(zero.num_variables(), 1)));
    }
  }
}

TEST(Determinant, RowScalingScalesDeterminant) {
  const auto built = build_matrix(EntryFamily::BinomialBeta, Domain::All, 2, 2);
  auto scaled = built.entries;
  const auto factor = x_var(2, 1) - lambda_var(2, 2) + Polynomial::constant(4, 3);
  for (std::size_t c = 0; c < scaled.order(); ++c) scaled(1, c) = scaled(1, c) * factor;
  EXPECT_EQ(det_bareiss(scaled), det_bareiss(built.entries) * factor);
}

TEST(Determinant, SimultaneousPermutationPreservesDeterminant) {
  const auto built = build_matrix(EntryFamily::Power, Domain::All, 2, 2);
  const std::size_t order = built.order();
  const std::vector<std::size_t> perm{2, 0, 1};
  SquareMatrix<Polynomial> p(order, Polynomial(4));
  for (std::size_t r = 0; r < order; ++r) {
    for (std::size_t c = 0; c < order; ++c) p(r, c) = built.entries(perm[r], perm[c]);
  }
  EXPECT_EQ(det_bareiss(p), det_bareiss(built.entries));
}

TEST(Determinant, RowSwapFlipsSign) {
  const auto built = build_matrix(EntryFamily::Binomial, Domain::All, 2, 2);
  auto swapped = built.entries;
  swapped.swap_rows(0, 2);
  EXPECT_EQ(det_bareiss(swapped), -det_bareiss(built.entries));
}

TEST(Determinant, NumericMatchesSymbolicEvaluation) {
  std::mt19937_64 rng(31);
  for (auto f : {EntryFamily::Binomial, EntryFamily::BinomialBeta, EntryFamily::Power}) {
    const auto symbolic = det_bareiss(build_matrix(f, Domain::All, 2, 2).entries);
    for (int trial = 0; trial < 5; ++trial) {
      const auto at = testing::random_assignment(rng, 4);
      EXPECT_EQ(det_numeric(f, Domain::All, 2, 2, at), symbolic.evaluate(at));
    }
  }
}

}  // namespace
}  // namespace compdet
