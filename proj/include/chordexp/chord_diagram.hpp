#pragma once

#include "chordexp/monomial.hpp"

#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chordexp {

class DisconnectedDiagramError : public std::domain_error {
 public:
  DisconnectedDiagramError() : std::domain_error("chord diagram is not connected") {}
};

// Endpoints of one chord, 1-based, first < second.
struct Chord {
  int first;
  int second;
  bool operator==(const Chord&) const = default;
};

bool chords_cross(const Chord& a, const Chord& b);

// Rooted chord diagram on 2n endpoints numbered counterclockwise; endpoint 1 is the root.
// Disconnected diagrams are representable; connectivity is a query.
class ChordDiagram {
 public:
  // `pairing[i-1]` is the partner of endpoint i. Throws std::invalid_argument
  // unless `pairing` is a fixed-point-free involution on 1..2n with n >= 1.
  explicit ChordDiagram(std::vector<int> pairing);

  static ChordDiagram single_chord();
  // Letter word such as "ABAB": equal letters mark the two ends of one chord.
  static ChordDiagram from_word(std::string_view word);
  // Same, with arbitrary integer chord ids.
  static ChordDiagram from_chord_ids(std::span<const int> ids);

  int size() const { return static_cast<int>(pairing_.size() / 2); }
  int endpoint_count() const { return static_cast<int>(pairing_.size()); }
  int partner(int endpoint) const;
  const std::vector<int>& pairing() const { return pairing_; }

  // Chords in counterclockwise order (ascending first endpoint).
  std::vector<Chord> chords() const;
  // Counterclockwise chord label (1-based) of the chord through `endpoint`.
  std::vector<int> chord_labels() const;

  bool is_connected() const;

  // Letters A, B, ... in counterclockwise chord order; beyond 52 chords
  // labels are written as "[k]".
  std::string word() const;

  auto operator<=>(const ChordDiagram&) const = default;

 private:
  std::vector<int> pairing_;
};

// The diagram on the given endpoints only, renumbered in increasing order.
// The endpoint set must be closed under the pairing.
ChordDiagram restrict_to(const ChordDiagram& c, const std::vector<int>& endpoints);
// Drops chord `label` (counterclockwise, 1-based). Requires size() >= 2.
ChordDiagram remove_chord(const ChordDiagram& c, int label);

struct IntersectionGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // (i, j), i < j, sorted
  bool has_edge(int i, int j) const;
  bool operator==(const IntersectionGraph&) const = default;
};

IntersectionGraph intersection_graph(const ChordDiagram& c);

// sigma[p-1] = counterclockwise label of the chord at intersection position p.
// Throws DisconnectedDiagramError.
std::vector<int> intersection_order(const ChordDiagram& c);

struct DiagramStats {
  int n = 0;
  std::vector<int> sigma;
  std::vector<int> terminal;   // intersection positions, ascending
  int b = 0;
  std::vector<int> delta;      // gaps between consecutive terminal chords
  std::vector<int> delta_bar;  // zeros, then delta; length n - 1
  FMonomial monomial;

  bool operator==(const DiagramStats&) const = default;
};

// Throws DisconnectedDiagramError.
DiagramStats stats(const ChordDiagram& c);

// Root of c1 goes to interval 0 of c2, the other endpoints of c1 into interval i.
// Throws std::out_of_range unless 1 <= i <= 2*c2.size() - 1.
ChordDiagram insert(const ChordDiagram& c1, const ChordDiagram& c2, int interval);

struct RootShareSplit {
  ChordDiagram root_share;
  int interval;
  ChordDiagram remainder;
};

// Inverse of insert. Throws std::invalid_argument on a single chord,
// DisconnectedDiagramError when c is not connected.
RootShareSplit root_share_decompose(const ChordDiagram& c);

enum class Family { cycloid, wheel, ladder, cw };

Family parse_family(std::string_view name);

ChordDiagram cycloid(int n);
ChordDiagram wheel(int n);
ChordDiagram ladder(int n);
// Wheel with beta.size() spokes; spoke k ends in the first interval of a
// cycloid block with beta[k-1] chords.
ChordDiagram cw_diagram(std::span<const int> beta);

// cycloid / wheel / ladder take {n}; cw takes the block sizes.
ChordDiagram make_family(Family kind, std::span<const int> params);

}  // namespace chordexp
