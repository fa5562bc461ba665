#include "chordexp/chord_series.hpp"
#include "chordexp/dse_verify.hpp"

#include <gtest/gtest.h>

using namespace chordexp;

namespace {

FPolynomial f(int j) { return FPolynomial::symbol(j); }

const DiagramCensus& census() {
  static const DiagramCensus c(7);
  return c;
}

void expect_pass(const CheckReport& r) {
  EXPECT_TRUE(r.passed()) << r.name << ": " << (r.violations.empty() ? "" : r.violations.front().where + " " + r.violations.front().detail);
  EXPECT_GT(r.cases, 0u) << r.name;
}

}  // namespace

TEST(RhoPolynomial, Basics) {
  RhoPolynomial p(3);
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p.degree(), -1);
  p.add(2, XSeries::x(3));
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.coefficient(2), XSeries::x(3));
  EXPECT_TRUE(p.coefficient(5).is_zero());
  p.add(2, -XSeries::x(3));
  EXPECT_TRUE(p.is_zero());
}

TEST(RhoPolynomial, ApplyOperator) {
  const auto g = g_table(2, 4, census());
  const RhoPolynomial p = RhoPolynomial::monomial(2, XSeries::constant(FPolynomial(Rational(1)), 4));
  const RhoPolynomial q = apply_g_rho(p, g);
  EXPECT_EQ(q.degree(), 1);
  EXPECT_EQ(q.coefficient(1), g[0] * Rational(2));
  EXPECT_EQ(q.coefficient(0), g[1]);
}

TEST(FOracle, BaseCases) {
  const auto g = g_table(6, 6, census());
  EXPECT_EQ(f_oracle(0, 0, g), FPolynomial(Rational(1)));
  for (int i = 1; i <= 6; ++i) EXPECT_TRUE(f_oracle(i, 0, g).is_zero());
  EXPECT_EQ(f_oracle(1, 1, g), f(0));
  EXPECT_THROW(f_oracle(7, 1, g), std::out_of_range);
}

TEST(FOracle, AgreesWithRecurrenceAndEnumeration) {
  const auto g = g_table(6, 6, census());
  const auto table = f_recurrence_table(5, 5, g);
  for (int i = 0; i <= 5; ++i)
    for (int j = 0; j <= 5; ++j) {
      const FPolynomial oracle = f_oracle(i, j, g);
      EXPECT_EQ(oracle, table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) << i << "," << j;
      EXPECT_EQ(oracle, f_enumeration(i, j, census())) << i << "," << j;
    }
  expect_pass(check_f_oracle(5, 5, census()));
}

TEST(Recurrences, GammaRecurrenceToSeven) { expect_pass(check_gamma_recurrence(7, census())); }

TEST(Recurrences, SecondKindSmallCases) {
  EXPECT_EQ(f_enumeration(1, 1, census()), f(0));
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) EXPECT_TRUE(f_enumeration(i, j, census()).is_zero());
  expect_pass(check_second_rec(5, 5, census()));
}

TEST(Recurrences, GTwoFromGOne) {
  const XSeries g1 = g_series(1, 4, census());
  EXPECT_EQ(g_series(2, 4, census()), g1 * theta(g1));
}

TEST(MainTheorem, OrderTwoByHand) {
  const XSeries g1 = g_series(1, 2, census());
  XSeries expected(2);
  expected.set_coefficient(1, f(0));
  expected.set_coefficient(2, f(0) * f(1));
  EXPECT_EQ(g1, expected);
  expect_pass(check_main_theorem(2, census()));
}

TEST(MainTheorem, ResidualVanishesToSix) {
  expect_pass(check_main_theorem(6, census()));
  expect_pass(check_full_dse(6, census()));
}

TEST(MainTheorem, OnlyRootChainSurvivesWithoutHigherF) {
  SymbolValues v{{0, Rational(2)}};
  for (int j = 1; j <= 6; ++j) v[j] = 0;
  const auto coeffs = g_series(1, 6, census()).evaluate_coefficients(v);
  EXPECT_EQ(coeffs[1], 2);
  for (int n = 2; n <= 6; ++n) EXPECT_EQ(coeffs[static_cast<std::size_t>(n)], 0);
}

TEST(PSeries, LowTerms) {
  const XSeries p = p_series(4, census());
  EXPECT_EQ(p.coefficient(1), -f(0));
  EXPECT_EQ(p.coefficient(2), f(0) * f(0) - f(0) * f(1));
  SymbolValues v;
  for (int j = 0; j <= 4; ++j) v[j] = Rational(5);
  EXPECT_EQ(p.evaluate_coefficients(v)[1], -5);
}
