#pragma once

#include "chordexp/monomial.hpp"
#include "chordexp/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace chordexp {

using SymbolValues = std::map<int, Rational>;

class MissingSymbolError : public std::out_of_range {
 public:
  explicit MissingSymbolError(int index);
  int index() const { return index_; }

 private:
  int index_;
};

// Polynomial in f_0, f_1, ... with exact rational coefficients.
class FPolynomial {
 public:
  using Terms = std::map<FMonomial, Rational>;

  FPolynomial() = default;
  explicit FPolynomial(const Rational& constant);
  explicit FPolynomial(const FMonomial& monomial, const Rational& coefficient = 1);

  // f_j; the zero polynomial when j < 0.
  static FPolynomial symbol(int j);

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const FMonomial& monomial) const;
  int max_symbol() const;

  void add_term(const FMonomial& monomial, const Rational& coefficient);

  FPolynomial& operator+=(const FPolynomial& other);
  FPolynomial& operator-=(const FPolynomial& other);
  FPolynomial& operator*=(const FPolynomial& other);
  FPolynomial& operator*=(const Rational& scalar);
  FPolynomial& operator*=(const FMonomial& monomial);
  FPolynomial operator-() const;

  friend FPolynomial operator+(FPolynomial a, const FPolynomial& b) { return a += b; }
  friend FPolynomial operator-(FPolynomial a, const FPolynomial& b) { return a -= b; }
  friend FPolynomial operator*(const FPolynomial& a, const FPolynomial& b);
  friend FPolynomial operator*(FPolynomial a, const Rational& s) { return a *= s; }
  friend FPolynomial operator*(const Rational& s, FPolynomial a) { return a *= s; }

  bool operator==(const FPolynomial& other) const = default;

  // Throws MissingSymbolError when a symbol present has no value.
  Rational evaluate(const SymbolValues& values) const;

  // Terms in increasing monomial order, e.g. "f0*f1 + 3*f0^2*f2".
  std::string to_string() const;

 private:
  Terms terms_;
};

}  // namespace chordexp
