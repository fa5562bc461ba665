#include "chordexp/tree.hpp"

#include <algorithm>
#include <cctype>

namespace chordexp {

struct LabeledTree::Node {
  int label = 0;
  std::vector<LabeledTree> children;  // empty for a leaf, else {left, right}
  int leaves = 1;
};

namespace {

struct BranchInfo {
  int min;
  int fully_right;
};

BranchInfo branch_info(const LabeledTree& t) {
  if (t.is_leaf()) return {t.label(), t.label()};
  const BranchInfo l = branch_info(t.left());
  const BranchInfo r = branch_info(t.right());
  return {std::min(l.min, r.min), r.fully_right};
}

// Returns the preorder edge of the first vertex violating P1, or 0.
int first_p1_violation(const LabeledTree& t, int& edge) {
  const int here = ++edge;
  if (t.is_leaf()) return 0;
  if (branch_info(t.left()).min >= fully_right_leaf(t)) return here;
  if (int bad = first_p1_violation(t.left(), edge)) return bad;
  return first_p1_violation(t.right(), edge);
}

void require_permutation(const LabeledTree& t) {
  auto labels = t.leaf_labels();
  std::sort(labels.begin(), labels.end());
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (labels[k] != static_cast<int>(k) + 1) throw std::invalid_argument("leaf labels must be a permutation of 1..n");
  }
}

bool holds_label_block(const LabeledTree& t, const LabeledTree& h) {
  const int n = t.leaf_count();
  const int k = h.leaf_count();
  std::vector<int> expected{1};
  for (int v = n - k + 2; v <= n; ++v) expected.push_back(v);
  auto labels = h.leaf_labels();
  std::sort(labels.begin(), labels.end());
  return labels == expected;
}

LabeledTree insert_at(const LabeledTree& a, const LabeledTree& t, int edge, int& counter) {
  if (++counter == edge) return LabeledTree::join(a, t);
  if (t.is_leaf()) return t;
  LabeledTree l = insert_at(a, t.left(), edge, counter);
  LabeledTree r = insert_at(a, t.right(), edge, counter);
  return LabeledTree::join(std::move(l), std::move(r));
}

std::size_t skip_space(std::string_view s, std::size_t i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return i;
}

LabeledTree parse_at(std::string_view s, std::size_t& i) {
  i = skip_space(s, i);
  if (i >= s.size()) throw std::invalid_argument("unexpected end of tree text");
  if (s[i] == '(') {
    ++i;
    LabeledTree l = parse_at(s, i);
    i = skip_space(s, i);
    if (i >= s.size() || s[i] != ',') throw std::invalid_argument("expected ',' in tree text");
    ++i;
    LabeledTree r = parse_at(s, i);
    i = skip_space(s, i);
    if (i >= s.size() || s[i] != ')') throw std::invalid_argument("expected ')' in tree text");
    ++i;
    return LabeledTree::join(std::move(l), std::move(r));
  }
  const std::size_t start = i;
  if (s[i] == '-') ++i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == start || (i == start + 1 && s[start] == '-')) throw std::invalid_argument("expected a leaf label in tree text");
  return LabeledTree::leaf(std::stoi(std::string(s.substr(start, i - start))));
}

void collect_shapes(int n, std::vector<LabeledTree>& out) {
  if (n == 1) {
    out.push_back(LabeledTree::leaf(0));
    return;
  }
  for (int k = 1; k < n; ++k) {
    std::vector<LabeledTree> lefts, rights;
    collect_shapes(k, lefts);
    collect_shapes(n - k, rights);
    for (const auto& l : lefts) {
      for (const auto& r : rights) out.push_back(LabeledTree::join(l, r));
    }
  }
}

LabeledTree fill_from(const LabeledTree& shape, const std::vector<int>& labels, std::size_t& next) {
  if (shape.is_leaf()) return LabeledTree::leaf(labels.at(next++));
  LabeledTree l = fill_from(shape.left(), labels, next);
  LabeledTree r = fill_from(shape.right(), labels, next);
  return LabeledTree::join(std::move(l), std::move(r));
}

ChordDiagram build_diagram(const LabeledTree& t) {
  if (t.is_leaf()) {
    if (t.label() != 1) throw TreeNotInImageError("single leaf must carry label 1", 1);
    return ChordDiagram::single_chord();
  }
  const auto path = smallest_removable_subtree(t);
  if (!path) throw TreeNotInImageError("no removable subtree contains leaf 1", 1);
  const LabeledTree& h = subtree_at(t, *path);
  const int h_edge = edge_index(t, *path);
  if (!holds_label_block(t, h)) throw TreeNotInImageError("removable subtree violates P2", h_edge);
  if (path->back() != Side::left) throw TreeNotInImageError("removable subtree is a right child", h_edge);
  const LabeledTree rest = remove_subtree(t, *path);
  const TreePath parent(path->begin(), path->end() - 1);
  const int interval = edge_index(rest, parent);
  const ChordDiagram share = build_diagram(normalized(h));
  const ChordDiagram remainder = build_diagram(normalized(rest));
  return insert(share, remainder, interval);
}

}  // namespace

LabeledTree LabeledTree::leaf(int label) {
  auto node = std::make_shared<Node>();
  node->label = label;
  return LabeledTree(std::move(node));
}

LabeledTree LabeledTree::join(LabeledTree left, LabeledTree right) {
  auto node = std::make_shared<Node>();
  node->leaves = left.leaf_count() + right.leaf_count();
  node->children.push_back(std::move(left));
  node->children.push_back(std::move(right));
  return LabeledTree(std::move(node));
}

LabeledTree LabeledTree::parse(std::string_view text) {
  std::size_t i = 0;
  LabeledTree t = parse_at(text, i);
  if (skip_space(text, i) != text.size()) throw std::invalid_argument("trailing characters in tree text");
  return t;
}

bool LabeledTree::is_leaf() const { return node_->children.empty(); }

int LabeledTree::label() const {
  if (!is_leaf()) throw std::logic_error("internal vertex has no label");
  return node_->label;
}

const LabeledTree& LabeledTree::left() const {
  if (is_leaf()) throw std::logic_error("leaf has no children");
  return node_->children[0];
}

const LabeledTree& LabeledTree::right() const {
  if (is_leaf()) throw std::logic_error("leaf has no children");
  return node_->children[1];
}

int LabeledTree::leaf_count() const { return node_->leaves; }

std::vector<int> LabeledTree::leaf_labels() const {
  if (is_leaf()) return {label()};
  auto out = left().leaf_labels();
  const auto r = right().leaf_labels();
  out.insert(out.end(), r.begin(), r.end());
  return out;
}

int LabeledTree::min_label() const { return branch_info(*this).min; }

LabeledTree LabeledTree::relabeled(const std::function<int(int)>& map) const {
  if (is_leaf()) return leaf(map(label()));
  return join(left().relabeled(map), right().relabeled(map));
}

std::string LabeledTree::to_string() const {
  if (is_leaf()) return std::to_string(label());
  return '(' + left().to_string() + ',' + right().to_string() + ')';
}

LabeledTree LabeledTree::shape() const {
  return relabeled([](int) { return 0; });
}

bool LabeledTree::operator==(const LabeledTree& other) const { return (*this <=> other) == 0; }

std::strong_ordering LabeledTree::operator<=>(const LabeledTree& other) const {
  if (node_ == other.node_) return std::strong_ordering::equal;
  if (is_leaf() != other.is_leaf()) return is_leaf() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (is_leaf()) return label() <=> other.label();
  if (auto c = left() <=> other.left(); c != 0) return c;
  return right() <=> other.right();
}

TreeNotInImageError::TreeNotInImageError(const std::string& what, int edge)
    : std::invalid_argument(what + " (vertex below edge " + std::to_string(edge) + ")"), edge_(edge) {}

const LabeledTree& subtree_at(const LabeledTree& t, const TreePath& path) {
  const LabeledTree* cur = &t;
  for (Side s : path) cur = s == Side::left ? &cur->left() : &cur->right();
  return *cur;
}

int edge_index(const LabeledTree& t, const TreePath& path) {
  int idx = 1;
  const LabeledTree* cur = &t;
  for (Side s : path) {
    if (s == Side::left) {
      idx += 1;
      cur = &cur->left();
    } else {
      idx += 1 + cur->left().edge_count();
      cur = &cur->right();
    }
  }
  return idx;
}

LabeledTree remove_subtree(const LabeledTree& t, const TreePath& path) {
  if (path.empty()) throw std::invalid_argument("cannot remove the whole tree");
  if (path.size() == 1) return path[0] == Side::left ? t.right() : t.left();
  const TreePath rest(path.begin() + 1, path.end());
  if (path[0] == Side::left) return LabeledTree::join(remove_subtree(t.left(), rest), t.right());
  return LabeledTree::join(t.left(), remove_subtree(t.right(), rest));
}

std::optional<TreePath> path_to_label(const LabeledTree& t, int label) {
  if (t.is_leaf()) return t.label() == label ? std::optional<TreePath>(TreePath{}) : std::nullopt;
  for (Side s : {Side::left, Side::right}) {
    if (auto sub = path_to_label(s == Side::left ? t.left() : t.right(), label)) {
      sub->insert(sub->begin(), s);
      return sub;
    }
  }
  return std::nullopt;
}

LabeledTree normalized(const LabeledTree& t) {
  auto sorted = t.leaf_labels();
  std::sort(sorted.begin(), sorted.end());
  return t.relabeled([&](int v) {
    return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1;
  });
}

LabeledTree tree_insert(const LabeledTree& a, const LabeledTree& b, int edge) {
  if (edge < 1 || edge > b.edge_count()) throw std::out_of_range("tree insertion edge out of range");
  int counter = 0;
  return insert_at(a, b, edge, counter);
}

int fully_right_leaf(const LabeledTree& t) {
  const LabeledTree* cur = &t;
  while (!cur->is_leaf()) cur = &cur->right();
  return cur->label();
}

void require_p1(const LabeledTree& t) {
  int edge = 0;
  if (int bad = first_p1_violation(t, edge)) throw TreeNotInImageError("P1 fails", bad);
}

bool check_p1(const LabeledTree& t) {
  int edge = 0;
  return first_p1_violation(t, edge) == 0;
}

std::optional<TreePath> smallest_removable_subtree(const LabeledTree& t) {
  const auto path = path_to_label(t, 1);
  if (!path) return std::nullopt;
  for (std::size_t len = path->size(); len >= 1; --len) {
    const TreePath prefix(path->begin(), path->begin() + static_cast<std::ptrdiff_t>(len));
    if (check_p1(remove_subtree(t, prefix))) return prefix;
  }
  return std::nullopt;
}

bool check_p2(const LabeledTree& t) {
  require_permutation(t);
  if (t.is_leaf()) return true;
  const auto path = smallest_removable_subtree(t);
  return path && holds_label_block(t, subtree_at(t, *path));
}

bool check_p2_recursive(const LabeledTree& t) {
  require_permutation(t);
  if (t.is_leaf()) return true;
  const auto path = smallest_removable_subtree(t);
  if (!path) return false;
  const LabeledTree& h = subtree_at(t, *path);
  if (!holds_label_block(t, h)) return false;
  return check_p2_recursive(normalized(h)) && check_p2_recursive(normalized(remove_subtree(t, *path)));
}

LabeledTree to_tree(const ChordDiagram& c) {
  if (c.size() == 1) return LabeledTree::leaf(1);
  const RootShareSplit split = root_share_decompose(c);
  const int m = split.remainder.size();
  const LabeledTree a = to_tree(split.root_share).relabeled([m](int v) { return v == 1 ? 1 : v + m; });
  const LabeledTree b = to_tree(split.remainder).relabeled([](int v) { return v + 1; });
  return tree_insert(a, b, split.interval);
}

ChordDiagram from_tree(const LabeledTree& t) {
  require_permutation(t);
  require_p1(t);
  return build_diagram(t);
}

std::vector<LabeledTree> tree_shapes(int n) {
  if (n < 1) throw std::invalid_argument("tree needs at least one leaf");
  std::vector<LabeledTree> out;
  collect_shapes(n, out);
  return out;
}

LabeledTree fill_labels(const LabeledTree& shape, const std::vector<int>& labels) {
  if (static_cast<int>(labels.size()) != shape.leaf_count()) throw std::invalid_argument("label count does not match leaf count");
  std::size_t next = 0;
  return fill_from(shape, labels, next);
}

}  // namespace chordexp
