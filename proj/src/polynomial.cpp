#include "chordexp/polynomial.hpp"

#include <stdexcept>

namespace chordexp {

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const BigInt& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  if (s.front() == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0 || s.find_first_of(" \t") != std::string::npos) {
    throw std::invalid_argument("malformed rational: " + std::string(text));
  }
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  q.canonicalize();
  return q;
}

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rational power(const Rational& base, unsigned exponent) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  r.canonicalize();
  return r;
}

MissingSymbolError::MissingSymbolError(int index)
    : std::out_of_range("no value supplied for symbol f" + std::to_string(index)), index_(index) {}

FPolynomial::FPolynomial(const Rational& constant) {
  if (constant != 0) terms_.emplace(FMonomial{}, constant);
}

FPolynomial::FPolynomial(const FMonomial& monomial, const Rational& coefficient) {
  if (coefficient != 0) terms_.emplace(monomial, coefficient);
}

FPolynomial FPolynomial::symbol(int j) {
  if (j < 0) return {};
  return FPolynomial(FMonomial::variable(j));
}

Rational FPolynomial::coefficient(const FMonomial& monomial) const {
  auto it = terms_.find(monomial);
  return it == terms_.end() ? Rational(0) : it->second;
}

int FPolynomial::max_symbol() const {
  int m = -1;
  for (const auto& [mono, c] : terms_) m = std::max(m, mono.max_index());
  return m;
}

void FPolynomial::add_term(const FMonomial& monomial, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(monomial, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second == 0) terms_.erase(it);
}

FPolynomial& FPolynomial::operator+=(const FPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

FPolynomial& FPolynomial::operator-=(const FPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

FPolynomial operator*(const FPolynomial& a, const FPolynomial& b) {
  FPolynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

FPolynomial& FPolynomial::operator*=(const FPolynomial& other) { return *this = *this * other; }

FPolynomial& FPolynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

FPolynomial& FPolynomial::operator*=(const FMonomial& monomial) {
  Terms shifted;
  for (auto& [m, c] : terms_) shifted.emplace(m * monomial, std::move(c));
  terms_ = std::move(shifted);
  return *this;
}

FPolynomial FPolynomial::operator-() const {
  FPolynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Rational FPolynomial::evaluate(const SymbolValues& values) const {
  Rational total = 0;
  for (const auto& [mono, c] : terms_) {
    Rational term = c;
    const auto& e = mono.exponents();
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      auto it = values.find(static_cast<int>(j));
      if (it == values.end()) throw MissingSymbolError(static_cast<int>(j));
      term *= power(it->second, e[j]);
    }
    total += term;
  }
  return total;
}

std::string FPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [mono, c] : terms_) {
    Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mono.is_one()) {
      out += chordexp::to_string(mag);
    } else {
      if (mag != 1) out += chordexp::to_string(mag) + '*';
      out += mono.to_string();
    }
  }
  return out;
}

}  // namespace chordexp
