#include "chordexp/series.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace chordexp;

namespace {

FPolynomial f(int j) { return FPolynomial::symbol(j); }
FPolynomial c(long p, long q = 1) { return FPolynomial(Rational(p, q)); }

FPolynomial random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> terms(0, 4), index(0, 3), exponent(0, 2), coeff(-5, 5), den(1, 3);
  FPolynomial p;
  for (int t = terms(rng); t > 0; --t) {
    FMonomial m;
    for (int v = 0; v < 2; ++v) m *= FMonomial::variable(index(rng), static_cast<unsigned>(exponent(rng)));
    Rational q(coeff(rng), den(rng));
    q.canonicalize();
    p.add_term(m, q);
  }
  return p;
}

}  // namespace

TEST(Rational, ParsesAndPrints) {
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(to_string(parse_rational("-3/9")), "-1/3");
  EXPECT_EQ(to_string(Rational(5)), "5");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(Rational, CombinatorialHelpers) {
  EXPECT_EQ(factorial(5), 120);
  EXPECT_EQ(binomial(6, 2), 15);
  EXPECT_EQ(power(Rational(2, 3), 3), Rational(8, 27));
  EXPECT_EQ(power(Rational(7), 0), Rational(1));
}

TEST(FMonomial, DegreeAndExponents) {
  const FMonomial m = FMonomial::from_indices({0, 0, 3});
  EXPECT_EQ(m.degree(), 3u);
  EXPECT_EQ(m.exponent(0), 2u);
  EXPECT_EQ(m.exponent(3), 1u);
  EXPECT_EQ(m.exponent(1), 0u);
  EXPECT_EQ(m.max_index(), 3);
  EXPECT_EQ(m.to_string(), "f0^2*f3");
  EXPECT_TRUE(FMonomial{}.is_one());
  EXPECT_EQ(FMonomial{}.to_string(), "1");
  EXPECT_EQ(FMonomial::variable(2, 0), FMonomial{});
  EXPECT_THROW(FMonomial::variable(-1), std::invalid_argument);
}

TEST(FMonomial, GradedOrdering) {
  const FMonomial f0 = FMonomial::variable(0), f1 = FMonomial::variable(1);
  EXPECT_LT(FMonomial{}, f1);
  EXPECT_LT(f1, f0 * f0);
  EXPECT_LT(f0 * f0, f0 * f1);
  EXPECT_LT(f0 * f1, f1 * f1);
  EXPECT_EQ(f0 * f1, f1 * f0);
}

TEST(FPolynomial, NegativeSymbolIsZero) {
  EXPECT_TRUE(f(-1).is_zero());
  EXPECT_TRUE(f(-5).is_zero());
  EXPECT_FALSE(f(0).is_zero());
}

TEST(FPolynomial, ArithmeticAndPrinting) {
  const FPolynomial p = f(0) * f(1) + c(3) * f(0) * f(0) * f(2);
  EXPECT_EQ(p.to_string(), "f0*f1 + 3*f0^2*f2");
  EXPECT_EQ((p - p).size(), 0u);
  EXPECT_EQ((-p).to_string(), "-f0*f1 - 3*f0^2*f2");
  EXPECT_EQ((c(1, 2) - f(0)).to_string(), "1/2 - f0");
  EXPECT_EQ(FPolynomial().to_string(), "0");
  EXPECT_EQ(p.max_symbol(), 2);
  EXPECT_EQ(p.coefficient(FMonomial::from_indices({0, 0, 2})), Rational(3));
}

TEST(FPolynomial, RingLawsOnRandomInputs) {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const FPolynomial a = random_poly(rng), b = random_poly(rng), d = random_poly(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + d, a + (b + d));
    EXPECT_EQ((a * b) * d, a * (b * d));
    EXPECT_EQ(a * (b + d), a * b + a * d);
    EXPECT_EQ(a - a, FPolynomial());
    EXPECT_EQ(a * c(1), a);
    EXPECT_TRUE((a * FPolynomial()).is_zero());
    const FPolynomial ab = a * b;
    for (const auto& [m, coeff] : ab.terms()) EXPECT_NE(coeff, 0);
  }
}

TEST(FPolynomial, Evaluate) {
  const FPolynomial p = c(3) * f(0) * f(0) * f(2) + f(0) * f(1) - c(1, 2);
  const SymbolValues v{{0, Rational(2)}, {1, Rational(1, 3)}, {2, Rational(-1)}};
  EXPECT_EQ(p.evaluate(v), Rational(-12) + Rational(2, 3) - Rational(1, 2));
  try {
    p.evaluate({{0, Rational(1)}});
    FAIL() << "expected MissingSymbolError";
  } catch (const MissingSymbolError& e) {
    EXPECT_EQ(e.index(), 1);
  }
}

TEST(XSeries, MultiplicationTruncates) {
  XSeries one_plus = XSeries::constant(c(1), 2) + XSeries::x(2);
  XSeries one_minus = XSeries::constant(c(1), 2) - XSeries::x(2);
  const XSeries prod = one_plus * one_minus;
  EXPECT_EQ(prod.coefficient(0), c(1));
  EXPECT_TRUE(prod.coefficient(1).is_zero());
  EXPECT_EQ(prod.coefficient(2), c(-1));
  EXPECT_EQ(prod, one_minus * one_plus);
}

TEST(XSeries, ResultOrderIsMinimumOfOperands) {
  const XSeries a = XSeries::x(5), b = XSeries::x(3);
  EXPECT_EQ((a * b).order(), 3);
  EXPECT_EQ((a + b).order(), 3);
  EXPECT_EQ((b - a).order(), 3);
  EXPECT_THROW(b.coefficient(4), std::out_of_range);
  EXPECT_THROW(b.truncated(4), std::out_of_range);
}

TEST(XSeries, Distributes) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    XSeries a(4), b(4), d(4);
    for (int n = 0; n <= 4; ++n) {
      a.set_coefficient(n, random_poly(rng));
      b.set_coefficient(n, random_poly(rng));
      d.set_coefficient(n, random_poly(rng));
    }
    EXPECT_EQ(a * (b + d), a * b + a * d);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * d, a * (b * d));
  }
}

TEST(XSeries, Theta) {
  EXPECT_EQ(theta(XSeries::x(3)), XSeries::x(3));
  XSeries s(3);
  s.set_coefficient(2, f(0));
  EXPECT_EQ(theta(s).coefficient(2), c(3) * f(0));
  XSeries k = XSeries::constant(f(1), 2);
  EXPECT_EQ(theta(k).coefficient(0), -f(1));
}

TEST(XSeries, LowestDegreeAndShift) {
  XSeries s(4);
  EXPECT_FALSE(s.lowest_degree().has_value());
  s.set_coefficient(2, f(0));
  EXPECT_EQ(s.lowest_degree(), 2);
  EXPECT_EQ(s.shifted().lowest_degree(), 3);
  EXPECT_EQ(s.shifted().order(), 4);
}

TEST(XSeries, EvaluateCoefficients) {
  XSeries s(2);
  s.set_coefficient(1, f(0));
  s.set_coefficient(2, f(0) * f(1));
  const auto v = s.evaluate_coefficients({{0, Rational(3)}, {1, Rational(1, 2)}});
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v[0], 0);
  EXPECT_EQ(v[1], 3);
  EXPECT_EQ(v[2], Rational(3, 2));
}
