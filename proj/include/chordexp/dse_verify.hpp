#pragma once

#include "chordexp/chord_series.hpp"
#include "chordexp/report.hpp"

#include <vector>

namespace chordexp {

// Polynomial in rho whose coefficients are XSeries of a common order.
class RhoPolynomial {
 public:
  explicit RhoPolynomial(int x_order);
  // c * rho^j
  static RhoPolynomial monomial(int j, const XSeries& c);

  int x_order() const { return x_order_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 when zero
  bool is_zero() const { return coeffs_.empty(); }
  // Zero beyond the degree.
  XSeries coefficient(int j) const;
  void add(int j, const XSeries& c);

 private:
  void trim();
  int x_order_;
  std::vector<XSeries> coeffs_;
};

// G_rho = sum_l g_l (1/l!) d^l/drho^l, so rho^m -> sum_l binom(m,l) g_l rho^(m-l).
// `g[l-1]` holds g_l; every g_l needed must be present.
RhoPolynomial apply_g_rho(const RhoPolynomial& p, const std::vector<XSeries>& g);

// sum_{n>=0} G_rho^n p, evaluated at rho = 0. Finite: each step lowers the rho-degree.
XSeries operator_series_at_zero(const RhoPolynomial& p, const std::vector<XSeries>& g);

// [x^i] sum_n G_rho^n rho^j |_{rho=0}, by literal iteration.
// Throws std::out_of_range when i exceeds the order of the supplied g-series.
FPolynomial f_oracle(int i, int j, const std::vector<XSeries>& g);
// Same numbers from F_{i,j} = sum_k sum_l binom(j,l) [x^k]g_l F_{i-k,j-l}.
std::vector<std::vector<FPolynomial>> f_recurrence_table(int i_max, int j_max, const std::vector<XSeries>& g);
// sum of f_C over |C| = i+1, b(C) = j+1.
FPolynomial f_enumeration(int i, int j, const DiagramCensus& census);

CheckReport check_f_oracle(int i_max, int j_max, const DiagramCensus& census);
// g_k = g_1 theta(g_{k-1}), its gamma form and its coefficient-wise spread form, k <= order.
CheckReport check_gamma_recurrence(int order, const DiagramCensus& census);
CheckReport check_second_rec(int i_max, int j_max, const DiagramCensus& census);
// g_1 = x f_0 + x sum_{n>=1} G_rho^n (sum_j f_j rho^j)|_{rho=0} up to x^order.
CheckReport check_main_theorem(int order, const DiagramCensus& census);
// Every L^k coefficient of the full equation for G(x, L), k <= order.
CheckReport check_full_dse(int order, const DiagramCensus& census);

// sum over RCCDs of x^|C| f_C (f_{b-2} - f_{b-1}), with f_{-1} = 0.
XSeries p_series(int order, const DiagramCensus& census);

}  // namespace chordexp
