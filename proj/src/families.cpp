#include "chordexp/chord_diagram.hpp"

namespace chordexp {

namespace {

void require_positive(int n) {
  if (n < 1) throw std::invalid_argument("family size must be positive");
}

ChordDiagram from_chord_list(int n, const std::vector<Chord>& chords) {
  std::vector<int> pairing(static_cast<std::size_t>(2 * n), 0);
  for (const auto& c : chords) {
    pairing[static_cast<std::size_t>(c.first - 1)] = c.second;
    pairing[static_cast<std::size_t>(c.second - 1)] = c.first;
  }
  return ChordDiagram(std::move(pairing));
}

}  // namespace

Family parse_family(std::string_view name) {
  if (name == "cycloid") return Family::cycloid;
  if (name == "wheel") return Family::wheel;
  if (name == "ladder") return Family::ladder;
  if (name == "cw") return Family::cw;
  throw std::invalid_argument("unknown family: " + std::string(name));
}

ChordDiagram cycloid(int n) {
  require_positive(n);
  if (n == 1) return ChordDiagram::single_chord();
  std::vector<Chord> chords{{1, 3}};
  for (int k = 2; k <= n - 1; ++k) chords.push_back({2 * k - 2, 2 * k + 1});
  chords.push_back({2 * n - 2, 2 * n});
  return from_chord_list(n, chords);
}

ChordDiagram wheel(int n) {
  require_positive(n);
  std::vector<Chord> chords;
  for (int k = 1; k <= n; ++k) chords.push_back({k, n + k});
  return from_chord_list(n, chords);
}

ChordDiagram ladder(int n) {
  require_positive(n);
  std::vector<Chord> chords{{1, n + 1}};
  for (int k = 2; k <= n; ++k) chords.push_back({k, 2 * n + 2 - k});
  return from_chord_list(n, chords);
}

ChordDiagram cw_diagram(std::span<const int> beta) {
  if (beta.empty()) throw std::invalid_argument("cw needs at least one spoke");
  const int spokes = static_cast<int>(beta.size());
  std::vector<int> ids;
  for (int k = 1; k <= spokes; ++k) ids.push_back(k);
  int offset = spokes;
  for (int k = 1; k <= spokes; ++k) {
    const int size = beta[static_cast<std::size_t>(k - 1)];
    require_positive(size);
    const auto block = cycloid(size).chord_labels();
    ids.push_back(block.front() + offset);
    ids.push_back(k);
    for (std::size_t p = 1; p < block.size(); ++p) ids.push_back(block[p] + offset);
    offset += size;
  }
  return ChordDiagram::from_chord_ids(ids);
}

ChordDiagram make_family(Family kind, std::span<const int> params) {
  if (kind == Family::cw) return cw_diagram(params);
  if (params.size() != 1) throw std::invalid_argument("family expects exactly one size parameter");
  switch (kind) {
    case Family::cycloid: return cycloid(params[0]);
    case Family::wheel: return wheel(params[0]);
    case Family::ladder: return ladder(params[0]);
    case Family::cw: break;
  }
  throw std::logic_error("unreachable family kind");
}

}  // namespace chordexp
