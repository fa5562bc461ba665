#pragma once

#include "chordexp/enumerate.hpp"
#include "chordexp/series.hpp"

#include <vector>

namespace chordexp {

// g_k = sum over RCCDs with b(C) >= k of x^|C| f_C f_{b(C)-k}, up to x^order.
// The census must cover sizes up to `order`.
XSeries g_series(int k, int order, const DiagramCensus& census);
XSeries g_series(int k, int order);

// (-1)^k / k! * g_k
XSeries gamma_series(int k, int order, const DiagramCensus& census);
XSeries gamma_series(int k, int order);

// g_1 .. g_count, each to x^order.
std::vector<XSeries> g_table(int count, int order, const DiagramCensus& census);

// G(x, L) = 1 - sum_k gamma_k(x) L^k, truncated at x^order (hence k <= order).
class GreenFunction {
 public:
  GreenFunction(int order, const DiagramCensus& census);
  explicit GreenFunction(std::vector<XSeries> gammas);

  int order() const { return static_cast<int>(gammas_.size()); }
  const XSeries& gamma(int k) const;

 private:
  std::vector<XSeries> gammas_;
};

// Throws MissingSymbolError if some f_j present lacks a value.
Rational evaluate(const GreenFunction& g, const SymbolValues& f_values, const Rational& x0, const Rational& L0);

}  // namespace chordexp
