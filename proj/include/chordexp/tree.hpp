#pragma once

#include "chordexp/chord_diagram.hpp"

#include <compare>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace chordexp {

// Planar binary tree with integer leaf labels. Immutable; copies share nodes.
// Edges are numbered in preorder starting with 1 for the root edge.
class LabeledTree {
 public:
  static LabeledTree leaf(int label);
  static LabeledTree join(LabeledTree left, LabeledTree right);
  // Parses "3" or "(l,r)", e.g. "((1,3),2)".
  static LabeledTree parse(std::string_view text);

  bool is_leaf() const;
  int label() const;  // throws std::logic_error on internal nodes
  const LabeledTree& left() const;
  const LabeledTree& right() const;

  int leaf_count() const;
  int edge_count() const { return 2 * leaf_count() - 1; }
  std::vector<int> leaf_labels() const;  // left to right
  int min_label() const;

  LabeledTree relabeled(const std::function<int(int)>& map) const;
  std::string to_string() const;
  // The same tree with every label set to 0.
  LabeledTree shape() const;

  bool operator==(const LabeledTree& other) const;
  // Leaves before internal nodes, leaves by label, internal nodes left then right.
  std::strong_ordering operator<=>(const LabeledTree& other) const;

 private:
  struct Node;
  explicit LabeledTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

class TreeNotInImageError : public std::invalid_argument {
 public:
  TreeNotInImageError(const std::string& what, int edge);
  // Preorder index of the edge above the offending vertex.
  int edge() const { return edge_; }

 private:
  int edge_;
};

enum class Side { left, right };
using TreePath = std::vector<Side>;

const LabeledTree& subtree_at(const LabeledTree& t, const TreePath& path);
// Preorder index of the edge entering the vertex at `path`.
int edge_index(const LabeledTree& t, const TreePath& path);
// Deletes the subtree at `path` (nonempty) and splices out its parent.
LabeledTree remove_subtree(const LabeledTree& t, const TreePath& path);
std::optional<TreePath> path_to_label(const LabeledTree& t, int label);
// Relabels leaves by rank, so the labels become 1..leaf_count().
LabeledTree normalized(const LabeledTree& t);

// Hangs `a` as the left child of a new vertex splitting edge `edge` of `b`.
// Throws std::out_of_range unless 1 <= edge <= b.edge_count().
LabeledTree tree_insert(const LabeledTree& a, const LabeledTree& b, int edge);

int fully_right_leaf(const LabeledTree& t);

// Throws TreeNotInImageError naming the first vertex where P1 fails, if any.
void require_p1(const LabeledTree& t);
bool check_p1(const LabeledTree& t);
// Smallest subtree holding leaf 1 whose removal keeps P1; never the whole tree.
std::optional<TreePath> smallest_removable_subtree(const LabeledTree& t);
// P2 at the top level only.
bool check_p2(const LabeledTree& t);
// P2 on t, then recursively on the normalized removed subtree and remainder.
// Both P2 checks throw std::invalid_argument unless labels are 1..n.
bool check_p2_recursive(const LabeledTree& t);

// Throws DisconnectedDiagramError.
LabeledTree to_tree(const ChordDiagram& c);
// Throws TreeNotInImageError when t is not the image of a diagram.
ChordDiagram from_tree(const LabeledTree& t);

// Every unlabeled shape with n leaves (labels 0), in a fixed order.
std::vector<LabeledTree> tree_shapes(int n);
// Shape with labels taken from `labels` left to right.
LabeledTree fill_labels(const LabeledTree& shape, const std::vector<int>& labels);

}  // namespace chordexp
