#include "chordexp/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace chordexp {

XSeries::XSeries(int order) {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

XSeries XSeries::x(int order) {
  XSeries s(order);
  if (order >= 1) s.coeffs_[1] = FPolynomial(Rational(1));
  return s;
}

XSeries XSeries::constant(const FPolynomial& c, int order) {
  XSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

const FPolynomial& XSeries::coefficient(int n) const {
  if (n < 0 || n > order()) throw std::out_of_range("coefficient beyond truncation order");
  return coeffs_[static_cast<std::size_t>(n)];
}

void XSeries::set_coefficient(int n, FPolynomial value) {
  if (n < 0 || n > order()) throw std::out_of_range("coefficient beyond truncation order");
  coeffs_[static_cast<std::size_t>(n)] = std::move(value);
}

void XSeries::add_to_coefficient(int n, const FPolynomial& value) {
  if (n < 0 || n > order()) throw std::out_of_range("coefficient beyond truncation order");
  coeffs_[static_cast<std::size_t>(n)] += value;
}

bool XSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const FPolynomial& p) { return p.is_zero(); });
}

std::optional<int> XSeries::lowest_degree() const {
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (!coeffs_[n].is_zero()) return static_cast<int>(n);
  }
  return std::nullopt;
}

XSeries XSeries::truncated(int new_order) const {
  if (new_order > order()) throw std::out_of_range("cannot extend a truncated series");
  XSeries out(new_order);
  for (int n = 0; n <= new_order; ++n) out.coeffs_[static_cast<std::size_t>(n)] = coeffs_[static_cast<std::size_t>(n)];
  return out;
}

XSeries& XSeries::operator+=(const XSeries& other) {
  if (other.order() < order()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += other.coeffs_[n];
  return *this;
}

XSeries& XSeries::operator-=(const XSeries& other) {
  if (other.order() < order()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= other.coeffs_[n];
  return *this;
}

XSeries& XSeries::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

XSeries& XSeries::operator*=(const FPolynomial& scalar) {
  for (auto& c : coeffs_) c = c * scalar;
  return *this;
}

XSeries XSeries::operator-() const {
  XSeries out = *this;
  out *= Rational(-1);
  return out;
}

XSeries operator*(const XSeries& a, const XSeries& b) {
  const int order = std::min(a.order(), b.order());
  XSeries out(order);
  for (int i = 0; i <= order; ++i) {
    const auto& ai = a.coeffs_[static_cast<std::size_t>(i)];
    if (ai.is_zero()) continue;
    for (int j = 0; i + j <= order; ++j) {
      const auto& bj = b.coeffs_[static_cast<std::size_t>(j)];
      if (bj.is_zero()) continue;
      out.coeffs_[static_cast<std::size_t>(i + j)] += ai * bj;
    }
  }
  return out;
}

XSeries XSeries::shifted() const {
  XSeries out(order());
  for (int n = order(); n >= 1; --n) out.coeffs_[static_cast<std::size_t>(n)] = coeffs_[static_cast<std::size_t>(n - 1)];
  return out;
}

std::vector<Rational> XSeries::evaluate_coefficients(const SymbolValues& values) const {
  std::vector<Rational> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.evaluate(values));
  return out;
}

XSeries theta(const XSeries& s) {
  XSeries out(s.order());
  for (int n = 0; n <= s.order(); ++n) out.set_coefficient(n, s.coefficient(n) * Rational(2 * n - 1));
  return out;
}

}  // namespace chordexp
