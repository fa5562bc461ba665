#pragma once

#include "chordexp/chord_diagram.hpp"

#include <string>
#include <utility>
#include <vector>

namespace fixtures {

using chordexp::ChordDiagram;

// Connected, intersection graph 1->2, 2->3, 2->4.
inline ChordDiagram four_chord_example() { return ChordDiagram({3, 6, 1, 8, 7, 2, 5, 4}); }
// Three chords, not connected.
inline ChordDiagram three_chord_disconnected() { return ChordDiagram({3, 6, 1, 5, 4, 2}); }
// Intersection order (1,2,4,3); equals the 2-chord crossing inserted at
// interval 1 into the 2-chord crossing.
inline ChordDiagram worked_example() { return ChordDiagram({4, 7, 5, 1, 3, 8, 2, 6}); }

// Reference diagram / tree pairs for n <= 3.
inline std::vector<std::pair<std::vector<int>, std::string>> table_up_to_three() {
  return {
      {{2, 1}, "1"},
      {{3, 4, 1, 2}, "(1,2)"},
      {{4, 6, 5, 1, 3, 2}, "((1,3),2)"},
      {{3, 5, 1, 6, 2, 4}, "(1,(2,3))"},
      {{5, 4, 6, 2, 1, 3}, "(2,(1,3))"},
      {{4, 5, 6, 1, 2, 3}, "((1,2),3)"},
  };
}

// Reference four-term configurations, members in (A, B, C, D) order.
inline std::vector<ChordDiagram> configuration_one() {
  return {ChordDiagram({4, 6, 7, 1, 8, 2, 3, 5}), ChordDiagram({4, 5, 7, 1, 2, 8, 3, 6}),
          ChordDiagram({4, 8, 6, 1, 7, 3, 5, 2}), ChordDiagram({4, 7, 6, 1, 8, 3, 2, 5})};
}
inline std::vector<ChordDiagram> configuration_two() {
  return {ChordDiagram({4, 6, 8, 1, 7, 2, 5, 3}), ChordDiagram({4, 8, 6, 1, 7, 3, 5, 2}),
          ChordDiagram({3, 5, 1, 7, 2, 8, 4, 6}), ChordDiagram({3, 6, 1, 7, 8, 2, 4, 5})};
}

}  // namespace fixtures
