#include "chordexp/chord_series.hpp"

namespace chordexp {

namespace {

void require_census(int order, const DiagramCensus& census) {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  if (order > census.max_size()) {
    throw std::out_of_range("census covers sizes up to " + std::to_string(census.max_size()) + ", order " +
                            std::to_string(order) + " requested");
  }
}

Rational gamma_factor(int k) {
  Rational r(1, 1);
  r /= Rational(factorial(static_cast<unsigned>(k)));
  return k % 2 == 0 ? r : Rational(-r);
}

}  // namespace

XSeries g_series(int k, int order, const DiagramCensus& census) {
  if (k < 1) throw std::invalid_argument("g_k needs k >= 1");
  require_census(order, census);
  XSeries g(order);
  for (int n = 1; n <= order; ++n) {
    FPolynomial coeff;
    for (const auto& [key, count] : census.at(n)) {
      if (key.b < k) continue;
      coeff.add_term(key.monomial * FMonomial::variable(key.b - k), Rational(count));
    }
    g.set_coefficient(n, std::move(coeff));
  }
  return g;
}

XSeries g_series(int k, int order) {
  const DiagramCensus census(std::max(order, 1), EnumerationLimits::from_environment().constructive);
  return g_series(k, order, census);
}

XSeries gamma_series(int k, int order, const DiagramCensus& census) {
  return g_series(k, order, census) * gamma_factor(k);
}

XSeries gamma_series(int k, int order) { return g_series(k, order) * gamma_factor(k); }

std::vector<XSeries> g_table(int count, int order, const DiagramCensus& census) {
  std::vector<XSeries> out;
  for (int k = 1; k <= count; ++k) out.push_back(g_series(k, order, census));
  return out;
}

GreenFunction::GreenFunction(int order, const DiagramCensus& census) {
  for (int k = 1; k <= order; ++k) gammas_.push_back(gamma_series(k, order, census));
}

GreenFunction::GreenFunction(std::vector<XSeries> gammas) : gammas_(std::move(gammas)) {}

const XSeries& GreenFunction::gamma(int k) const {
  if (k < 1 || k > order()) throw std::out_of_range("gamma index beyond truncation");
  return gammas_[static_cast<std::size_t>(k - 1)];
}

Rational evaluate(const GreenFunction& g, const SymbolValues& f_values, const Rational& x0, const Rational& L0) {
  Rational total = 1;
  Rational l_power = 1;
  for (int k = 1; k <= g.order(); ++k) {
    l_power *= L0;
    const auto coeffs = g.gamma(k).evaluate_coefficients(f_values);
    Rational series_value = 0;
    Rational x_power = 1;
    for (const auto& c : coeffs) {
      series_value += c * x_power;
      x_power *= x0;
    }
    total -= series_value * l_power;
  }
  return total;
}

}  // namespace chordexp
