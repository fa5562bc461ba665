#include "chordexp/dse_verify.hpp"

#include <stdexcept>

namespace chordexp {

namespace {

std::string power_label(int n) { return "x^" + std::to_string(n); }

// Records one violation per differing coefficient; returns true when equal.
bool compare_series(CheckReport& report, const std::string& what, const XSeries& lhs, const XSeries& rhs) {
  bool equal = true;
  const int order = std::min(lhs.order(), rhs.order());
  for (int n = 0; n <= order; ++n) {
    FPolynomial diff = lhs.coefficient(n) - rhs.coefficient(n);
    if (!diff.is_zero()) {
      report.fail(what + " " + power_label(n), "residual " + diff.to_string());
      equal = false;
    }
  }
  ++report.cases;
  return equal;
}

void compare_poly(CheckReport& report, const std::string& where, const FPolynomial& lhs, const FPolynomial& rhs) {
  ++report.cases;
  FPolynomial diff = lhs - rhs;
  if (!diff.is_zero()) report.fail(where, "lhs " + lhs.to_string() + ", rhs " + rhs.to_string());
}

void require_g(const std::vector<XSeries>& g, int order) {
  if (g.empty() || g.front().order() < order) throw std::out_of_range("g-series truncation too low for the requested coefficient");
}

Rational gamma_factor(int k) {
  Rational r = Rational(1) / Rational(factorial(static_cast<unsigned>(k)));
  return k % 2 == 0 ? r : Rational(-r);
}

SymbolValues all_ones(int max_index) {
  SymbolValues v;
  for (int j = 0; j <= max_index; ++j) v[j] = 1;
  return v;
}

RhoPolynomial f_of_rho(int lowest_power, int terms, int x_order) {
  RhoPolynomial p(x_order);
  for (int j = 0; j < terms; ++j) p.add(j + lowest_power, XSeries::constant(FPolynomial::symbol(j), x_order));
  return p;
}

}  // namespace

RhoPolynomial::RhoPolynomial(int x_order) : x_order_(x_order) {
  if (x_order < 0) throw std::invalid_argument("x order must be nonnegative");
}

RhoPolynomial RhoPolynomial::monomial(int j, const XSeries& c) {
  RhoPolynomial p(c.order());
  p.add(j, c);
  return p;
}

XSeries RhoPolynomial::coefficient(int j) const {
  if (j < 0 || j > degree()) return XSeries(x_order_);
  return coeffs_[static_cast<std::size_t>(j)];
}

void RhoPolynomial::add(int j, const XSeries& c) {
  if (j < 0) throw std::invalid_argument("negative rho power");
  while (degree() < j) coeffs_.emplace_back(x_order_);
  coeffs_[static_cast<std::size_t>(j)] += c.truncated(x_order_);
  trim();
}

void RhoPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

RhoPolynomial apply_g_rho(const RhoPolynomial& p, const std::vector<XSeries>& g) {
  const int x_order = p.x_order();
  RhoPolynomial out(x_order);
  for (int m = 1; m <= p.degree(); ++m) {
    const XSeries a = p.coefficient(m);
    if (a.is_zero()) continue;
    // g_l starts at x^l, so it vanishes under truncation once l > x_order.
    for (int l = 1; l <= m && l <= x_order; ++l) {
      if (l > static_cast<int>(g.size())) throw std::out_of_range("g-series table too short for the operator");
      const XSeries term = a * g[static_cast<std::size_t>(l - 1)].truncated(x_order) *
                           Rational(binomial(static_cast<unsigned>(m), static_cast<unsigned>(l)));
      out.add(m - l, term);
    }
  }
  return out;
}

XSeries operator_series_at_zero(const RhoPolynomial& p, const std::vector<XSeries>& g) {
  XSeries total(p.x_order());
  RhoPolynomial current = p;
  while (!current.is_zero()) {
    total += current.coefficient(0);
    current = apply_g_rho(current, g);
  }
  return total;
}

FPolynomial f_oracle(int i, int j, const std::vector<XSeries>& g) {
  if (i < 0 || j < 0) throw std::invalid_argument("F indices must be nonnegative");
  require_g(g, i);
  const RhoPolynomial start = RhoPolynomial::monomial(j, XSeries::constant(FPolynomial(Rational(1)), i));
  return operator_series_at_zero(start, g).coefficient(i);
}

std::vector<std::vector<FPolynomial>> f_recurrence_table(int i_max, int j_max, const std::vector<XSeries>& g) {
  require_g(g, i_max);
  std::vector<std::vector<FPolynomial>> f(static_cast<std::size_t>(i_max) + 1,
                                          std::vector<FPolynomial>(static_cast<std::size_t>(j_max) + 1));
  f[0][0] = FPolynomial(Rational(1));
  for (int i = 1; i <= i_max; ++i) {
    for (int j = 1; j <= j_max; ++j) {
      FPolynomial sum;
      for (int k = 1; k <= i; ++k) {
        for (int l = 1; l <= j && l <= k; ++l) {
          if (l > static_cast<int>(g.size())) throw std::out_of_range("g-series table too short for the recurrence");
          const FPolynomial& gkl = g[static_cast<std::size_t>(l - 1)].coefficient(k);
          const FPolynomial& rest = f[static_cast<std::size_t>(i - k)][static_cast<std::size_t>(j - l)];
          if (gkl.is_zero() || rest.is_zero()) continue;
          sum += gkl * rest * Rational(binomial(static_cast<unsigned>(j), static_cast<unsigned>(l)));
        }
      }
      f[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(sum);
    }
  }
  return f;
}

FPolynomial f_enumeration(int i, int j, const DiagramCensus& census) {
  FPolynomial sum;
  for (const auto& [key, count] : census.at(i + 1)) {
    if (key.b == j + 1) sum.add_term(key.monomial, Rational(count));
  }
  return sum;
}

CheckReport check_f_oracle(int i_max, int j_max, const DiagramCensus& census) {
  CheckReport report{"F oracle: iteration = recurrence = enumeration"};
  const auto g = g_table(std::max(i_max, 1), i_max, census);
  const auto table = f_recurrence_table(i_max, j_max, g);
  for (int i = 0; i <= i_max; ++i) {
    for (int j = 0; j <= j_max; ++j) {
      const std::string where = "F(" + std::to_string(i) + "," + std::to_string(j) + ")";
      const FPolynomial iterated = f_oracle(i, j, g);
      compare_poly(report, where + " iteration vs recurrence", iterated, table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      compare_poly(report, where + " iteration vs enumeration", iterated, f_enumeration(i, j, census));
    }
  }
  return report;
}

CheckReport check_gamma_recurrence(int order, const DiagramCensus& census) {
  CheckReport report{"g_k = g_1 (2x d/dx - 1) g_{k-1}"};
  const auto g = g_table(order, order, census);
  std::vector<XSeries> gamma;
  for (int k = 1; k <= order; ++k) gamma.push_back(g[static_cast<std::size_t>(k - 1)] * gamma_factor(k));
  for (int k = 2; k <= order; ++k) {
    const auto& gk = g[static_cast<std::size_t>(k - 1)];
    const auto& prev = g[static_cast<std::size_t>(k - 2)];
    compare_series(report, "g_" + std::to_string(k), gk, g.front() * theta(prev));
    compare_series(report, "gamma_" + std::to_string(k), gamma[static_cast<std::size_t>(k - 1)],
                   gamma.front() * theta(gamma[static_cast<std::size_t>(k - 2)]) * Rational(1, k));
    for (int i = 0; i <= order; ++i) {
      FPolynomial spread;
      for (int l = 1; l < i; ++l) spread += g.front().coefficient(i - l) * prev.coefficient(l) * Rational(2 * l - 1);
      compare_poly(report, "spread g_" + std::to_string(k) + " " + power_label(i), gk.coefficient(i), spread);
    }
  }
  // With every f_j = 1, g_1 counts diagrams and the k = 2 row is the Nijenhuis-Wilf sum.
  const auto ones = all_ones(order);
  const CountTable counts = stein_counts(order, census);
  const auto g1 = g.front().evaluate_coefficients(ones);
  for (int n = 1; n <= order; ++n) {
    ++report.cases;
    if (g1[static_cast<std::size_t>(n)] != Rational(counts.c(n))) {
      report.fail("g_1 at f=1, " + power_label(n), to_string(g1[static_cast<std::size_t>(n)]) + " != c_n = " + to_string(counts.c(n)));
    }
  }
  if (order >= 2) {
    const auto g2 = g[1].evaluate_coefficients(ones);
    for (int n = 2; n <= order; ++n) {
      Rational nw = 0;
      for (int l = 1; l < n; ++l) nw += Rational(2 * l - 1) * g1[static_cast<std::size_t>(l)] * g1[static_cast<std::size_t>(n - l)];
      ++report.cases;
      if (g2[static_cast<std::size_t>(n)] != nw || nw != Rational(counts.c(n))) {
        report.fail("g_2 at f=1, " + power_label(n), to_string(g2[static_cast<std::size_t>(n)]) + " vs " + to_string(nw));
      }
    }
  }
  return report;
}

CheckReport check_second_rec(int i_max, int j_max, const DiagramCensus& census) {
  CheckReport report{"second recurrence over (|C|, b(C))"};
  const auto g = g_table(std::max(j_max, 1), i_max, census);
  for (int i = 1; i <= i_max; ++i) {
    for (int j = 1; j <= j_max; ++j) {
      FPolynomial rhs;
      for (int k = 1; k <= i; ++k) {
        for (int l = 1; l <= j; ++l) {
          const FPolynomial& a = g[static_cast<std::size_t>(l - 1)].coefficient(k);
          if (a.is_zero()) continue;
          const FPolynomial b = f_enumeration(i - k, j - l, census);
          if (b.is_zero()) continue;
          rhs += a * b * Rational(binomial(static_cast<unsigned>(j), static_cast<unsigned>(l)));
        }
      }
      compare_poly(report, "i=" + std::to_string(i) + " j=" + std::to_string(j), f_enumeration(i, j, census), rhs);
    }
  }
  return report;
}

CheckReport check_main_theorem(int order, const DiagramCensus& census) {
  if (order < 1) throw std::invalid_argument("main theorem check needs order >= 1");
  CheckReport report{"g_1 = x f_0 + x sum_{n>=1} G_rho^n F(rho)|_{rho=0}"};
  const auto g = g_table(order, order, census);
  const XSeries& g1 = g.front();

  // Operator side through the F coefficients.
  XSeries via_f(order);
  via_f.set_coefficient(1, FPolynomial::symbol(0));
  for (int i = 1; i < order; ++i) {
    FPolynomial c;
    for (int j = 0; j <= i; ++j) c += FPolynomial::symbol(j) * f_oracle(i, j, g);
    via_f.set_coefficient(i + 1, std::move(c));
  }
  compare_series(report, "via F_{i,j}", g1, via_f);

  // Operator side by iterating on the whole of F(rho) at once.
  const int x_order = order - 1;
  const RhoPolynomial start = f_of_rho(0, order + 1, x_order);
  XSeries tail = operator_series_at_zero(start, g) - start.coefficient(0);
  XSeries literal(order);
  for (int n = 0; n <= x_order; ++n) literal.set_coefficient(n + 1, tail.coefficient(n));
  literal.add_to_coefficient(1, FPolynomial::symbol(0));
  compare_series(report, "literal operator", g1, literal);
  return report;
}

CheckReport check_full_dse(int order, const DiagramCensus& census) {
  if (order < 1) throw std::invalid_argument("DSE check needs order >= 1");
  CheckReport report{"G(x,L) = 1 - x G(x, -d/drho)^{-1} (e^{-L rho} - 1) F(rho)|_{rho=0}"};
  const auto g = g_table(order, order, census);
  const int x_order = order - 1;
  for (int k = 1; k <= order; ++k) {
    const RhoPolynomial start = f_of_rho(k - 1, order + 1, x_order);
    const XSeries inner = operator_series_at_zero(start, g);
    XSeries rhs(order);
    for (int n = 0; n <= x_order; ++n) rhs.set_coefficient(n + 1, inner.coefficient(n));
    compare_series(report, "gamma_" + std::to_string(k),
                   g[static_cast<std::size_t>(k - 1)] * gamma_factor(k), rhs * gamma_factor(k));
  }
  return report;
}

XSeries p_series(int order, const DiagramCensus& census) {
  if (order > census.max_size()) throw std::out_of_range("census too small for P(x)");
  XSeries p(order);
  for (int n = 1; n <= order; ++n) {
    FPolynomial c;
    for (const auto& [key, count] : census.at(n)) {
      const FPolynomial tail = FPolynomial::symbol(key.b - 2) - FPolynomial::symbol(key.b - 1);
      c += FPolynomial(key.monomial, Rational(count)) * tail;
    }
    p.set_coefficient(n, std::move(c));
  }
  return p;
}

}  // namespace chordexp
