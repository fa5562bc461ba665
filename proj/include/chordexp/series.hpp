#pragma once

#include "chordexp/polynomial.hpp"

#include <optional>
#include <vector>

namespace chordexp {

// Power series in x truncated after x^order, coefficients in FPolynomial.
class XSeries {
 public:
  explicit XSeries(int order);

  static XSeries x(int order);
  static XSeries constant(const FPolynomial& c, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  // Coefficient of x^n for 0 <= n <= order.
  const FPolynomial& coefficient(int n) const;
  void set_coefficient(int n, FPolynomial value);
  void add_to_coefficient(int n, const FPolynomial& value);

  bool is_zero() const;
  std::optional<int> lowest_degree() const;
  XSeries truncated(int order) const;

  XSeries& operator+=(const XSeries& other);
  XSeries& operator-=(const XSeries& other);
  XSeries& operator*=(const Rational& scalar);
  XSeries& operator*=(const FPolynomial& scalar);
  XSeries operator-() const;

  friend XSeries operator+(XSeries a, const XSeries& b) { return a += b; }
  friend XSeries operator-(XSeries a, const XSeries& b) { return a -= b; }
  friend XSeries operator*(const XSeries& a, const XSeries& b);
  friend XSeries operator*(XSeries a, const Rational& s) { return a *= s; }
  friend XSeries operator*(const Rational& s, XSeries a) { return a *= s; }
  friend XSeries operator*(XSeries a, const FPolynomial& s) { return a *= s; }

  bool operator==(const XSeries& other) const = default;

  // Multiplies by x, keeping the order (the top coefficient drops out).
  XSeries shifted() const;

  std::vector<Rational> evaluate_coefficients(const SymbolValues& values) const;

 private:
  std::vector<FPolynomial> coeffs_;
};

// (2x d/dx - 1): x^n -> (2n-1) x^n.
XSeries theta(const XSeries& s);

}  // namespace chordexp
