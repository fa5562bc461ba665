#include "chordexp/lemmas.hpp"

#include "chordexp/enumerate.hpp"
#include "chordexp/tree.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace chordexp {

namespace {

std::string joined(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k]);
  return out + ")";
}

std::string describe(const ChordDiagram& c) { return "pairing " + joined(c.pairing()); }

std::vector<int> sorted_copy(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::set<LabeledTree> image_of(int n) {
  std::set<LabeledTree> out;
  for (const auto& c : enumerate_constructive(n)) out.insert(to_tree(c));
  return out;
}

}  // namespace

CheckReport check_delta_concat(int n_max) {
  CheckReport report{"root-share concatenation of delta_bar"};
  std::size_t literal_matches = 0;
  for (int n = 2; n <= n_max; ++n) {
    for (const auto& c : enumerate_constructive(n)) {
      ++report.cases;
      const auto split = root_share_decompose(c);
      const DiagramStats s = stats(c);
      const DiagramStats s1 = stats(split.root_share);
      const DiagramStats s2 = stats(split.remainder);
      if (s.b != s2.b + 1) report.fail(describe(c), "b(C) = " + std::to_string(s.b) + ", b(C2) = " + std::to_string(s2.b));

      std::vector<int> glued = s2.delta_bar;
      glued.push_back(s1.b - 1);
      glued.insert(glued.end(), s1.delta_bar.begin(), s1.delta_bar.end());
      if (sorted_copy(s.delta_bar) != sorted_copy(glued)) {
        report.fail(describe(c), "delta_bar " + joined(s.delta_bar) + " vs glued " + joined(glued));
      }

      for (int k = 1; k <= s.b; ++k) {
        const FMonomial lhs = s.monomial * FMonomial::variable(s.b - k);
        const FMonomial rhs = s1.monomial * FMonomial::variable(s1.b - 1) * s2.monomial * FMonomial::variable(s2.b - k + 1);
        if (lhs != rhs) report.fail(describe(c) + " k=" + std::to_string(k), lhs.to_string() + " != " + rhs.to_string());
      }

      std::vector<int> literal = s2.delta_bar;
      literal.push_back(s1.b - 2);
      literal.insert(literal.end(), s1.delta_bar.begin(), s1.delta_bar.end());
      if (literal == s.delta_bar) ++literal_matches;
    }
  }
  report.notes.push_back("sequence form (delta_bar(C2), b(C1)-2, delta_bar(C1)) matched " + std::to_string(literal_matches) +
                         " of " + std::to_string(report.cases) + " diagrams");
  report.notes.push_back("single-chord root share contributes the gap b(C1)-1 = 0, so the 2-chord diagram has delta_bar = (0)");
  return report;
}

CheckReport check_root_subtree_claims(int n_max) {
  CheckReport report{"root subtree inequality and factorization"};
  for (int n = 2; n <= n_max; ++n) {
    for (const auto& c : enumerate_constructive(n)) {
      ++report.cases;
      const LabeledTree t = to_tree(c);
      try {
        const DiagramStats s = stats(c);
        const DiagramStats s1 = stats(from_tree(normalized(t.left())));
        const DiagramStats s2 = stats(from_tree(normalized(t.right())));
        if (s1.b < s.b - s2.b) {
          report.fail(describe(c), "b(D1) = " + std::to_string(s1.b) + " < b(C) - b(D2) = " + std::to_string(s.b - s2.b));
        }
        const int gap = s1.b + s2.b - s.b;
        const FMonomial rhs = gap < 0 ? FMonomial{} : s1.monomial * FMonomial::variable(gap) * s2.monomial;
        if (gap < 0 || rhs != s.monomial) report.fail(describe(c), "f_C = " + s.monomial.to_string() + ", product " + rhs.to_string());
      } catch (const TreeNotInImageError& e) {
        report.fail(describe(c), std::string("root subtree outside the image: ") + e.what());
      }
    }
  }
  return report;
}

CheckReport check_shuffle_counts(int n_max) {
  CheckReport report{"label shuffle counts are binomial"};
  for (int n = 2; n <= n_max; ++n) {
    const auto image = image_of(n);
    for (int k = 1; k < n; ++k) {
      const auto lefts = enumerate_constructive(k);
      const auto rights = enumerate_constructive(n - k);
      for (const auto& d1 : lefts) {
        const LabeledTree g1 = to_tree(d1);
        const int b1 = stats(d1).b;
        for (const auto& d2 : rights) {
          const LabeledTree g2 = to_tree(d2);
          const int b2 = stats(d2).b;
          std::vector<int> hits(static_cast<std::size_t>(n) + 1, 0);
          for (unsigned mask = 0; mask < (1u << n); ++mask) {
            if (std::popcount(mask) != k) continue;
            std::vector<int> in, out;
            for (int v = 1; v <= n; ++v) ((mask >> (v - 1)) & 1u ? in : out).push_back(v);
            const LabeledTree t = LabeledTree::join(g1.relabeled([&](int v) { return in[static_cast<std::size_t>(v - 1)]; }),
                                                    g2.relabeled([&](int v) { return out[static_cast<std::size_t>(v - 1)]; }));
            if (!image.contains(t)) continue;
            const int b = fully_right_leaf(t);
            ++hits[static_cast<std::size_t>(std::count_if(in.begin(), in.end(), [b](int v) { return v < b; }))];
          }
          for (int l = 0; l <= n; ++l) {
            ++report.cases;
            const BigInt expected = (l >= 1 && l <= b1) ? binomial(static_cast<unsigned>(b2 + l - 1), static_cast<unsigned>(l)) : BigInt(0);
            if (BigInt(hits[static_cast<std::size_t>(l)]) != expected) {
              report.fail(describe(d1) + " | " + describe(d2) + " l=" + std::to_string(l),
                          std::to_string(hits[static_cast<std::size_t>(l)]) + " shuffles, expected " + to_string(expected));
            }
          }
        }
      }
    }
  }
  return report;
}

CheckReport check_round_trip(int n_max) {
  CheckReport report{"to_tree / from_tree round trip"};
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& c : enumerate_constructive(n)) {
      ++report.cases;
      const LabeledTree t = to_tree(c);
      try {
        const ChordDiagram back = from_tree(t);
        if (back != c) report.fail(describe(c), "from_tree gives " + describe(back));
        if (to_tree(back) != t) report.fail(describe(c), "tree changes on second pass");
      } catch (const std::invalid_argument& e) {
        report.fail(describe(c), std::string("from_tree rejected ") + t.to_string() + ": " + e.what());
      }
    }
  }
  return report;
}

CheckReport check_fully_right_leaf(int n_max) {
  CheckReport report{"b(C) is the fully right leaf of T(C)"};
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& c : enumerate_constructive(n)) {
      ++report.cases;
      const int leaf = fully_right_leaf(to_tree(c));
      const int b = stats(c).b;
      if (leaf != b) report.fail(describe(c), "leaf " + std::to_string(leaf) + ", b " + std::to_string(b));
    }
  }
  return report;
}

CheckReport check_tree_insertion(int n_max) {
  CheckReport report{"T respects insertion"};
  for (int n = 2; n <= n_max; ++n) {
    for (int k = 1; k < n; ++k) {
      const int m = n - k;
      for (const auto& c1 : enumerate_constructive(k)) {
        const LabeledTree a = to_tree(c1).relabeled([m](int v) { return v == 1 ? 1 : v + m; });
        for (const auto& c2 : enumerate_constructive(m)) {
          const LabeledTree b = to_tree(c2).relabeled([](int v) { return v + 1; });
          for (int i = 1; i <= 2 * m - 1; ++i) {
            ++report.cases;
            const ChordDiagram c = insert(c1, c2, i);
            const auto split = root_share_decompose(c);
            if (split.root_share != c1 || split.remainder != c2 || split.interval != i) {
              report.fail(describe(c), "decomposition does not return the factors");
            }
            if (to_tree(c) != tree_insert(a, b, i)) report.fail(describe(c), "tree of the insertion differs");
          }
        }
      }
    }
  }
  return report;
}

CheckReport check_image_filter(int n) {
  CheckReport report{"P1 and recursive P2 characterize the image"};
  const auto image = image_of(n);
  std::set<LabeledTree> selected;
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (const auto& shape : tree_shapes(n)) {
    std::iota(labels.begin(), labels.end(), 1);
    do {
      ++report.cases;
      const LabeledTree t = fill_labels(shape, labels);
      if (check_p1(t) && check_p2_recursive(t)) selected.insert(t);
    } while (std::next_permutation(labels.begin(), labels.end()));
  }
  for (const auto& t : selected) {
    if (!image.contains(t)) report.fail(t.to_string(), "passes P1 and P2 but is not an image tree");
  }
  for (const auto& t : image) {
    if (!selected.contains(t)) report.fail(t.to_string(), "image tree fails P1 or P2");
  }
  report.notes.push_back(std::to_string(selected.size()) + " trees selected, image has " + std::to_string(image.size()));
  return report;
}

}  // namespace chordexp
