#include "chordexp/chord_diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace chordexp {

namespace {

class CrossTable {
 public:
  explicit CrossTable(const std::vector<Chord>& chords)
      : n_(static_cast<int>(chords.size())), cells_(static_cast<std::size_t>(n_) * n_, 0) {
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) {
        if (chords_cross(chords[static_cast<std::size_t>(i)], chords[static_cast<std::size_t>(j)])) {
          cells_[idx(i, j)] = cells_[idx(j, i)] = 1;
        }
      }
    }
  }
  int size() const { return n_; }
  bool operator()(int i, int j) const { return cells_[idx(i, j)] != 0; }

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }
  int n_;
  std::vector<char> cells_;
};

// Components of the crossing graph induced on `vs` (ascending), ordered by
// smallest member, each ascending. Chord ids are 0-based.
std::vector<std::vector<int>> components(const std::vector<int>& vs, const CrossTable& cross) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(static_cast<std::size_t>(cross.size()), 0);
  for (int seed : vs) {
    if (seen[static_cast<std::size_t>(seed)]) continue;
    std::vector<int> comp{seed};
    seen[static_cast<std::size_t>(seed)] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (int w : vs) {
        if (!seen[static_cast<std::size_t>(w)] && cross(comp[head], w)) {
          seen[static_cast<std::size_t>(w)] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

void order_recursive(const std::vector<int>& vs, const CrossTable& cross, std::vector<int>& out) {
  out.push_back(vs.front());
  const std::vector<int> rest(vs.begin() + 1, vs.end());
  for (const auto& comp : components(rest, cross)) order_recursive(comp, cross, out);
}

int find_root(std::vector<int>& parent, int v) {
  while (parent[static_cast<std::size_t>(v)] != v) {
    parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    v = parent[static_cast<std::size_t>(v)];
  }
  return v;
}

}  // namespace

bool chords_cross(const Chord& a, const Chord& b) {
  return (a.first < b.first && b.first < a.second && a.second < b.second) ||
         (b.first < a.first && a.first < b.second && b.second < a.second);
}

ChordDiagram::ChordDiagram(std::vector<int> pairing) : pairing_(std::move(pairing)) {
  const int m = static_cast<int>(pairing_.size());
  if (m == 0 || m % 2 != 0) throw std::invalid_argument("pairing must have positive even length");
  for (int i = 1; i <= m; ++i) {
    const int p = pairing_[static_cast<std::size_t>(i - 1)];
    if (p < 1 || p > m || p == i || pairing_[static_cast<std::size_t>(p - 1)] != i) {
      throw std::invalid_argument("pairing is not a fixed-point-free involution");
    }
  }
}

ChordDiagram ChordDiagram::single_chord() { return ChordDiagram({2, 1}); }

ChordDiagram ChordDiagram::from_chord_ids(std::span<const int> ids) {
  std::map<int, std::vector<int>> where;
  for (std::size_t i = 0; i < ids.size(); ++i) where[ids[i]].push_back(static_cast<int>(i) + 1);
  std::vector<int> pairing(ids.size(), 0);
  for (const auto& [id, pos] : where) {
    if (pos.size() != 2) throw std::invalid_argument("every chord must appear exactly twice");
    pairing[static_cast<std::size_t>(pos[0] - 1)] = pos[1];
    pairing[static_cast<std::size_t>(pos[1] - 1)] = pos[0];
  }
  return ChordDiagram(std::move(pairing));
}

ChordDiagram ChordDiagram::from_word(std::string_view word) {
  std::vector<int> ids(word.begin(), word.end());
  return from_chord_ids(ids);
}

int ChordDiagram::partner(int endpoint) const {
  if (endpoint < 1 || endpoint > endpoint_count()) throw std::out_of_range("endpoint out of range");
  return pairing_[static_cast<std::size_t>(endpoint - 1)];
}

std::vector<Chord> ChordDiagram::chords() const {
  std::vector<Chord> out;
  out.reserve(pairing_.size() / 2);
  for (int i = 1; i <= endpoint_count(); ++i) {
    const int p = pairing_[static_cast<std::size_t>(i - 1)];
    if (i < p) out.push_back({i, p});
  }
  return out;
}

std::vector<int> ChordDiagram::chord_labels() const {
  std::vector<int> labels(pairing_.size(), 0);
  int next = 0;
  for (int i = 1; i <= endpoint_count(); ++i) {
    const int p = pairing_[static_cast<std::size_t>(i - 1)];
    if (i < p) labels[static_cast<std::size_t>(i - 1)] = labels[static_cast<std::size_t>(p - 1)] = ++next;
  }
  return labels;
}

bool ChordDiagram::is_connected() const {
  const auto ch = chords();
  const int n = static_cast<int>(ch.size());
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  int classes = n;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!chords_cross(ch[static_cast<std::size_t>(i)], ch[static_cast<std::size_t>(j)])) continue;
      const int a = find_root(parent, i);
      const int b = find_root(parent, j);
      if (a != b) {
        parent[static_cast<std::size_t>(a)] = b;
        --classes;
      }
    }
  }
  return classes == 1;
}

std::string ChordDiagram::word() const {
  std::string out;
  for (int label : chord_labels()) {
    if (label <= 26) {
      out += static_cast<char>('A' + label - 1);
    } else if (label <= 52) {
      out += static_cast<char>('a' + label - 27);
    } else {
      out += '[' + std::to_string(label) + ']';
    }
  }
  return out;
}

ChordDiagram restrict_to(const ChordDiagram& c, const std::vector<int>& endpoints) {
  std::vector<int> pts = endpoints;
  std::sort(pts.begin(), pts.end());
  std::vector<int> rank(static_cast<std::size_t>(c.endpoint_count()) + 1, 0);
  for (std::size_t k = 0; k < pts.size(); ++k) rank[static_cast<std::size_t>(pts[k])] = static_cast<int>(k) + 1;
  std::vector<int> pairing;
  pairing.reserve(pts.size());
  for (int p : pts) {
    const int q = rank[static_cast<std::size_t>(c.partner(p))];
    if (q == 0) throw std::invalid_argument("endpoint set is not closed under the pairing");
    pairing.push_back(q);
  }
  return ChordDiagram(std::move(pairing));
}

ChordDiagram remove_chord(const ChordDiagram& c, int label) {
  const auto ch = c.chords();
  if (label < 1 || label > static_cast<int>(ch.size())) throw std::out_of_range("chord label out of range");
  const Chord gone = ch[static_cast<std::size_t>(label - 1)];
  std::vector<int> keep;
  for (int i = 1; i <= c.endpoint_count(); ++i) {
    if (i != gone.first && i != gone.second) keep.push_back(i);
  }
  return restrict_to(c, keep);
}

bool IntersectionGraph::has_edge(int i, int j) const {
  if (i > j) std::swap(i, j);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(i, j));
}

IntersectionGraph intersection_graph(const ChordDiagram& c) {
  const auto ch = c.chords();
  IntersectionGraph g;
  g.n = static_cast<int>(ch.size());
  for (int i = 0; i < g.n; ++i) {
    for (int j = i + 1; j < g.n; ++j) {
      if (chords_cross(ch[static_cast<std::size_t>(i)], ch[static_cast<std::size_t>(j)])) g.edges.emplace_back(i + 1, j + 1);
    }
  }
  return g;
}

std::vector<int> intersection_order(const ChordDiagram& c) {
  if (!c.is_connected()) throw DisconnectedDiagramError();
  const CrossTable cross(c.chords());
  std::vector<int> all(static_cast<std::size_t>(c.size()));
  std::iota(all.begin(), all.end(), 0);
  std::vector<int> order;
  order.reserve(all.size());
  order_recursive(all, cross, order);
  for (int& v : order) ++v;
  return order;
}

DiagramStats stats(const ChordDiagram& c) {
  DiagramStats s;
  s.n = c.size();
  s.sigma = intersection_order(c);
  const CrossTable cross(c.chords());
  std::vector<int> position(static_cast<std::size_t>(s.n) + 1, 0);
  for (int p = 1; p <= s.n; ++p) position[static_cast<std::size_t>(s.sigma[static_cast<std::size_t>(p - 1)])] = p;
  for (int i = 0; i < s.n; ++i) {
    bool terminal = true;
    for (int j = i + 1; j < s.n && terminal; ++j) terminal = !cross(i, j);
    if (terminal) s.terminal.push_back(position[static_cast<std::size_t>(i) + 1]);
  }
  std::sort(s.terminal.begin(), s.terminal.end());
  s.b = s.terminal.front();
  for (std::size_t k = 1; k < s.terminal.size(); ++k) s.delta.push_back(s.terminal[k] - s.terminal[k - 1]);
  s.delta_bar.assign(static_cast<std::size_t>(s.n) - s.terminal.size(), 0);
  s.delta_bar.insert(s.delta_bar.end(), s.delta.begin(), s.delta.end());
  s.monomial = FMonomial::from_indices(s.delta_bar);
  return s;
}

ChordDiagram insert(const ChordDiagram& c1, const ChordDiagram& c2, int interval) {
  const int m = c1.size();
  const int n = c2.size();
  if (interval < 1 || interval > 2 * n - 1) throw std::out_of_range("insertion interval out of range");
  // New position of each old endpoint, per factor.
  std::vector<int> pos1(static_cast<std::size_t>(2 * m) + 1), pos2(static_cast<std::size_t>(2 * n) + 1);
  int next = 0;
  pos1[1] = ++next;
  for (int k = 1; k <= interval; ++k) pos2[static_cast<std::size_t>(k)] = ++next;
  for (int k = 2; k <= 2 * m; ++k) pos1[static_cast<std::size_t>(k)] = ++next;
  for (int k = interval + 1; k <= 2 * n; ++k) pos2[static_cast<std::size_t>(k)] = ++next;
  std::vector<int> pairing(static_cast<std::size_t>(next));
  for (int k = 1; k <= 2 * m; ++k) pairing[static_cast<std::size_t>(pos1[static_cast<std::size_t>(k)] - 1)] = pos1[static_cast<std::size_t>(c1.partner(k))];
  for (int k = 1; k <= 2 * n; ++k) pairing[static_cast<std::size_t>(pos2[static_cast<std::size_t>(k)] - 1)] = pos2[static_cast<std::size_t>(c2.partner(k))];
  return ChordDiagram(std::move(pairing));
}

RootShareSplit root_share_decompose(const ChordDiagram& c) {
  if (c.size() < 2) throw std::invalid_argument("root-share decomposition needs at least two chords");
  if (!c.is_connected()) throw DisconnectedDiagramError();
  const auto ch = c.chords();
  const CrossTable cross(ch);
  std::vector<int> others(ch.size() - 1);
  std::iota(others.begin(), others.end(), 1);
  // The first component is the one holding the second chord.
  const auto comp = components(others, cross).front();
  std::vector<char> in_remainder(static_cast<std::size_t>(c.endpoint_count()) + 1, 0);
  for (int v : comp) {
    in_remainder[static_cast<std::size_t>(ch[static_cast<std::size_t>(v)].first)] = 1;
    in_remainder[static_cast<std::size_t>(ch[static_cast<std::size_t>(v)].second)] = 1;
  }
  std::vector<int> share_pts, rem_pts;
  for (int p = 1; p <= c.endpoint_count(); ++p) (in_remainder[static_cast<std::size_t>(p)] ? rem_pts : share_pts).push_back(p);
  const int second = share_pts[1];
  const int interval = static_cast<int>(std::count_if(rem_pts.begin(), rem_pts.end(), [&](int p) { return p < second; }));
  return {restrict_to(c, share_pts), interval, restrict_to(c, rem_pts)};
}

}  // namespace chordexp
