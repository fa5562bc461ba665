#include "chordexp/enumerate.hpp"
#include "chordexp/tree.hpp"
#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace chordexp;

namespace {

LabeledTree right_comb(int n) {
  LabeledTree t = LabeledTree::leaf(n);
  for (int k = n - 1; k >= 1; --k) t = LabeledTree::join(LabeledTree::leaf(k), t);
  return t;
}

LabeledTree left_comb(const std::vector<int>& labels) {
  LabeledTree t = LabeledTree::leaf(labels.front());
  for (std::size_t k = 1; k < labels.size(); ++k) t = LabeledTree::join(t, LabeledTree::leaf(labels[k]));
  return t;
}

LabeledTree shift(const LabeledTree& t, int by) {
  return t.relabeled([by](int l) { return l + by; });
}

}  // namespace

TEST(LabeledTree, ParseAndPrint) {
  const LabeledTree t = LabeledTree::parse("((1,3),2)");
  EXPECT_EQ(t.to_string(), "((1,3),2)");
  EXPECT_EQ(t.leaf_count(), 3);
  EXPECT_EQ(t.edge_count(), 5);
  EXPECT_EQ(t.leaf_labels(), (std::vector<int>{1, 3, 2}));
  EXPECT_EQ(t.min_label(), 1);
  EXPECT_EQ(t.left().right().label(), 3);
  EXPECT_THROW(t.label(), std::logic_error);
  EXPECT_EQ(LabeledTree::parse(" ( 10 , 2 ) ").to_string(), "(10,2)");
  EXPECT_THROW(LabeledTree::parse("(1,2"), std::invalid_argument);
  EXPECT_THROW(LabeledTree::parse("(1,2,3)"), std::invalid_argument);
  EXPECT_THROW(LabeledTree::parse(""), std::invalid_argument);
}

TEST(LabeledTree, ShapeAndNormalization) {
  const LabeledTree t = LabeledTree::parse("((7,3),5)");
  EXPECT_EQ(t.shape(), LabeledTree::parse("((0,0),0)"));
  EXPECT_EQ(normalized(t), LabeledTree::parse("((3,1),2)"));
  EXPECT_EQ(fill_labels(t.shape(), {1, 2, 3}), LabeledTree::parse("((1,2),3)"));
}

TEST(LabeledTree, Paths) {
  const LabeledTree t = LabeledTree::parse("((1,3),(2,4))");
  const auto p = path_to_label(t, 2);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(*p, (TreePath{Side::right, Side::left}));
  EXPECT_EQ(subtree_at(t, *p).label(), 2);
  // preorder edges: root 1, (1,3) 2, leaf1 3, leaf3 4, (2,4) 5, leaf2 6
  EXPECT_EQ(edge_index(t, {}), 1);
  EXPECT_EQ(edge_index(t, {Side::left, Side::right}), 4);
  EXPECT_EQ(edge_index(t, *p), 6);
  EXPECT_EQ(remove_subtree(t, {Side::left, Side::left}), LabeledTree::parse("(3,(2,4))"));
  EXPECT_FALSE(path_to_label(t, 9).has_value());
}

TEST(LabeledTree, ShapesAreCatalan) {
  const std::vector<std::size_t> catalan{1, 1, 2, 5, 14, 42};
  for (int n = 1; n <= 6; ++n) {
    const auto shapes = tree_shapes(n);
    EXPECT_EQ(shapes.size(), catalan[static_cast<std::size_t>(n - 1)]);
    EXPECT_EQ(std::set<LabeledTree>(shapes.begin(), shapes.end()).size(), shapes.size());
  }
}

TEST(TreeInsert, LeafIntoLeafIsCherry) {
  EXPECT_EQ(tree_insert(LabeledTree::leaf(1), LabeledTree::leaf(2), 1), LabeledTree::parse("(1,2)"));
  EXPECT_THROW(tree_insert(LabeledTree::leaf(1), LabeledTree::leaf(2), 2), std::out_of_range);
  EXPECT_THROW(tree_insert(LabeledTree::leaf(1), LabeledTree::leaf(2), 0), std::out_of_range);
}

TEST(TreeInsert, SplitsTheNamedEdge) {
  const LabeledTree b = LabeledTree::parse("(2,3)");
  const LabeledTree a = LabeledTree::leaf(1);
  EXPECT_EQ(tree_insert(a, b, 1), LabeledTree::parse("(1,(2,3))"));
  EXPECT_EQ(tree_insert(a, b, 2), LabeledTree::parse("((1,2),3)"));
  EXPECT_EQ(tree_insert(a, b, 3), LabeledTree::parse("(2,(1,3))"));
}

TEST(TreeInsert, RepeatedRootInsertionBuildsWheelTree) {
  LabeledTree t = LabeledTree::leaf(1);
  for (int n = 2; n <= 7; ++n) {
    t = tree_insert(t, LabeledTree::leaf(n), 1);
    std::vector<int> labels(static_cast<std::size_t>(n));
    std::iota(labels.begin(), labels.end(), 1);
    EXPECT_EQ(t, left_comb(labels));
    EXPECT_EQ(to_tree(wheel(n)), t) << "n=" << n;
  }
}

TEST(TreeInsert, MatchesDiagramInsertion) {
  for (int total = 2; total <= 5; ++total)
    for (int n1 = 1; n1 < total; ++n1)
      for (const ChordDiagram& c1 : enumerate_constructive(n1))
        for (const ChordDiagram& c2 : enumerate_constructive(total - n1))
          for (int i = 1; i <= 2 * c2.size() - 1; ++i) {
            const int m = c2.size();
            const LabeledTree a = to_tree(c1).relabeled([m](int l) { return l == 1 ? 1 : l + m; });
            EXPECT_EQ(to_tree(insert(c1, c2, i)), tree_insert(a, shift(to_tree(c2), 1), i));
          }
}

TEST(ToTree, Families) {
  for (int n = 1; n <= 7; ++n) {
    EXPECT_EQ(to_tree(cycloid(n)), right_comb(n));
    EXPECT_EQ(fully_right_leaf(to_tree(cycloid(n))), n);
  }
  for (int n = 2; n <= 7; ++n) {
    std::vector<int> labels{1};
    for (int k = n; k >= 2; --k) labels.push_back(k);
    EXPECT_EQ(to_tree(ladder(n)), left_comb(labels));
    EXPECT_EQ(fully_right_leaf(to_tree(ladder(n))), 2);
  }
}

TEST(ToTree, RejectsDisconnected) {
  EXPECT_THROW(to_tree(fixtures::three_chord_disconnected()), DisconnectedDiagramError);
}

TEST(ToTree, TablePairsUpToThree) {
  for (const auto& [pairing, tree] : fixtures::table_up_to_three()) {
    const ChordDiagram c(pairing);
    EXPECT_EQ(to_tree(c).to_string(), tree);
    EXPECT_EQ(from_tree(LabeledTree::parse(tree)), c);
  }
}

TEST(ToTree, InjectiveAtFour) {
  std::set<std::pair<LabeledTree, std::vector<int>>> seen;
  for (const ChordDiagram& c : enumerate_constructive(4)) {
    const LabeledTree t = to_tree(c);
    seen.insert({t.shape(), t.leaf_labels()});
  }
  EXPECT_EQ(seen.size(), 27u);
}

TEST(FromTree, RoundTripUpToSix) {
  for (int n = 1; n <= 6; ++n)
    for (const ChordDiagram& c : enumerate_constructive(n)) {
      const LabeledTree t = to_tree(c);
      EXPECT_EQ(from_tree(t), c);
      EXPECT_EQ(to_tree(from_tree(t)), t);
    }
}

TEST(FromTree, SingleLeaf) { EXPECT_EQ(from_tree(LabeledTree::leaf(1)), ChordDiagram::single_chord()); }

TEST(FromTree, RejectsTreesOutsideImage) {
  const LabeledTree swapped = LabeledTree::parse("(2,1)");
  EXPECT_FALSE(check_p1(swapped));
  try {
    from_tree(swapped);
    FAIL();
  } catch (const TreeNotInImageError& e) {
    EXPECT_EQ(e.edge(), 1);
  }
  EXPECT_THROW(require_p1(swapped), TreeNotInImageError);
  EXPECT_THROW(from_tree(LabeledTree::parse("((2,1),3)")), TreeNotInImageError);
}

TEST(Properties, LabelsMustBePermutation) {
  EXPECT_THROW(check_p2(LabeledTree::parse("(1,3)")), std::invalid_argument);
  EXPECT_THROW(check_p2_recursive(LabeledTree::parse("(1,1)")), std::invalid_argument);
}

TEST(Properties, ImagesSatisfyP1AndP2) {
  for (int n = 1; n <= 5; ++n)
    for (const ChordDiagram& c : enumerate_constructive(n)) {
      const LabeledTree t = to_tree(c);
      EXPECT_TRUE(check_p1(t)) << t.to_string();
      EXPECT_TRUE(check_p2_recursive(t)) << t.to_string();
    }
}

TEST(Properties, FilterSelectsExactlyTheImage) {
  for (int n = 1; n <= 5; ++n) {
    std::set<LabeledTree> image;
    for (const ChordDiagram& c : enumerate_constructive(n)) image.insert(to_tree(c));
    std::set<LabeledTree> filtered;
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (const LabeledTree& shape : tree_shapes(n)) {
      std::iota(labels.begin(), labels.end(), 1);
      do {
        const LabeledTree t = fill_labels(shape, labels);
        if (check_p1(t) && check_p2_recursive(t)) filtered.insert(t);
      } while (std::next_permutation(labels.begin(), labels.end()));
    }
    EXPECT_EQ(filtered, image) << "n=" << n;
    if (n == 4) EXPECT_EQ(filtered.size(), 27u);
  }
}

TEST(Properties, SmallestRemovableSubtree) {
  EXPECT_FALSE(smallest_removable_subtree(LabeledTree::leaf(1)).has_value());
  const auto h = smallest_removable_subtree(LabeledTree::parse("((1,3),2)"));
  ASSERT_TRUE(h.has_value());
  EXPECT_EQ(*h, TreePath{Side::left});
}

TEST(FullyRightLeaf, EqualsB) {
  EXPECT_EQ(fully_right_leaf(LabeledTree::parse("((1,3),(4,2))")), 2);
  for (int n = 1; n <= 6; ++n)
    for (const ChordDiagram& c : enumerate_constructive(n)) EXPECT_EQ(fully_right_leaf(to_tree(c)), stats(c).b);
}
