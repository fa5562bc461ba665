#include "chordexp/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace chordexp {

std::vector<FourTermQuad> four_term_quads(const ChordDiagram& c) {
  std::vector<FourTermQuad> out;
  const std::vector<int> word = c.chord_labels();
  for (std::size_t m = 1; m < word.size(); ++m) {
    const int moving = word[m];
    std::vector<int> rest = word;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(m));
    for (int pivot = 1; pivot <= c.size(); ++pivot) {
      if (pivot == moving) continue;
      const auto p1 = static_cast<std::size_t>(std::find(rest.begin(), rest.end(), pivot) - rest.begin());
      const auto p2 = static_cast<std::size_t>(std::find(rest.begin() + static_cast<std::ptrdiff_t>(p1) + 1, rest.end(), pivot) - rest.begin());
      // Slot 0 would displace the root; the same circle position is the end of the word.
      const std::array<std::size_t, 4> slots{p1 + 1, p1 == 0 ? rest.size() : p1, p2 + 1, p2};
      std::vector<ChordDiagram> members;
      std::array<int, 4> moving_labels{};
      for (std::size_t s = 0; s < 4; ++s) {
        std::vector<int> ids = rest;
        ids.insert(ids.begin() + static_cast<std::ptrdiff_t>(slots[s]), moving);
        ChordDiagram d = ChordDiagram::from_chord_ids(ids);
        if (!d.is_connected()) break;
        moving_labels[s] = d.chord_labels()[slots[s]];
        members.push_back(std::move(d));
      }
      if (members.size() != 4) continue;
      out.push_back({{members[0], members[1], members[2], members[3]}, moving_labels});
    }
  }
  return out;
}

std::vector<FourTermQuad> four_term_quads(int n) {
  std::set<FourTermQuad> unique;
  for (const auto& c : enumerate_constructive(n)) {
    for (auto& q : four_term_quads(c)) unique.insert(std::move(q));
  }
  return {unique.begin(), unique.end()};
}

FPolynomial m_alpha(const ChordDiagram& x, int alpha) {
  const DiagramStats s = stats(x);
  FPolynomial p = FPolynomial::symbol(s.b - alpha);
  p *= s.monomial;
  return p;
}

FPolynomial four_term_sum(const FourTermQuad& q, const AlphaMap& alpha) {
  FPolynomial sum;
  for (std::size_t s = 0; s < 4; ++s) {
    const FPolynomial term = m_alpha(q.members[s], alpha(q.members[s]));
    if (s % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

std::vector<FourTermQuad> four_term_violations(int n, int k) {
  std::vector<FourTermQuad> out;
  const AlphaMap constant = [k](const ChordDiagram&) { return k; };
  for (auto& q : four_term_quads(n)) {
    if (!four_term_sum(q, constant).is_zero()) out.push_back(std::move(q));
  }
  return out;
}

GevreyReport gevrey_check(const Rational& c_bound, int k, int order, const DiagramCensus& census) {
  if (c_bound <= 0) throw std::invalid_argument("Gevrey bound constant must be positive");
  if (k < 1 || order < 1) throw std::invalid_argument("Gevrey check needs k >= 1 and order >= 1");
  if (order > census.max_size()) throw std::out_of_range("census too small for the Gevrey check");
  GevreyReport r;
  r.c_bound = c_bound;
  r.k = k;
  r.order = order;
  const Rational k_fact(factorial(static_cast<unsigned>(k)));
  const Rational base = 2 * c_bound * c_bound;
  for (int n = 1; n <= order; ++n) {
    Rational g = 0;
    for (const auto& [key, count] : census.at(n)) {
      if (key.b < k) continue;
      // f_j = C^{j+1} turns f_C f_{b-k} into one power of C.
      unsigned e = static_cast<unsigned>(key.b - k + 1);
      const auto& ex = key.monomial.exponents();
      for (std::size_t j = 0; j < ex.size(); ++j) e += static_cast<unsigned>(j + 1) * ex[j];
      g += Rational(count) * power(c_bound, e);
    }
    const Rational magnitude = g / k_fact;
    const Rational ratio = magnitude / Rational(factorial(static_cast<unsigned>(n)));
    const Rational limit = power(base, static_cast<unsigned>(n)) / power(c_bound, static_cast<unsigned>(k)) / k_fact;
    r.magnitudes.push_back(magnitude);
    r.ratios.push_back(ratio);
    r.bound.push_back(limit);
    if (ratio > limit) r.ratio_bound_holds = false;
    if (ratio > 0) r.growth = std::max(r.growth, std::pow(ratio.get_d(), 1.0 / n));

    const BigInt count = census.count_with_b_at_least(n, k);
    const BigInt double_fact = matching_count(n);
    const BigInt cap = (BigInt(1) << n) * factorial(static_cast<unsigned>(n));
    ++r.counts_checked;
    if (count > double_fact || double_fact > cap) r.count_bound_holds = false;
  }
  return r;
}

}  // namespace chordexp
