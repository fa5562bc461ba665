#pragma once

#include "chordexp/enumerate.hpp"
#include "chordexp/polynomial.hpp"

#include <array>
#include <compare>
#include <functional>
#include <vector>

namespace chordexp {

// Four diagrams that differ only in where one endpoint of a moving chord sits
// relative to the endpoints p1 < p2 of a pivot chord: just after p1, just
// before p1, just after p2, just before p2.
struct FourTermQuad {
  std::array<ChordDiagram, 4> members;
  std::array<int, 4> moving_chord;  // counterclockwise label in each member

  auto operator<=>(const FourTermQuad&) const = default;
};

// Configurations obtained by moving a non-root endpoint of `c`; quads with a
// disconnected member are dropped.
std::vector<FourTermQuad> four_term_quads(const ChordDiagram& c);
// All configurations among RCCD(n), without repeats, sorted.
std::vector<FourTermQuad> four_term_quads(int n);

// f_X f_{b(X) - alpha}, zero when the index is negative.
FPolynomial m_alpha(const ChordDiagram& x, int alpha);

using AlphaMap = std::function<int(const ChordDiagram&)>;

// M(A) - M(B) + M(C) - M(D)
FPolynomial four_term_sum(const FourTermQuad& q, const AlphaMap& alpha);

// Configurations at size n whose sum is nonzero for the constant map alpha = k.
std::vector<FourTermQuad> four_term_violations(int n, int k);

struct GevreyReport {
  Rational c_bound;
  int k = 0;
  int order = 0;
  std::vector<Rational> magnitudes;  // |gamma_{k,n}|, n = 1..order
  std::vector<Rational> ratios;      // |gamma_{k,n}| / n!
  std::vector<Rational> bound;       // (2C^2)^n C^{-k} / k!
  double growth = 0;                 // max_n ratio^(1/n)
  bool ratio_bound_holds = true;
  bool count_bound_holds = true;     // c_{n,k} <= (2n-1)!! <= 2^n n!
  std::size_t counts_checked = 0;

  bool passed() const { return ratio_bound_holds && count_bound_holds; }
};

// Substitutes f_j = C^{j+1} into gamma_k up to x^order.
GevreyReport gevrey_check(const Rational& c_bound, int k, int order, const DiagramCensus& census);

}  // namespace chordexp
