#include "chordexp/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace chordexp {

namespace {

void require_size(int n, int limit) {
  if (n < 1) throw std::invalid_argument("diagram size must be positive");
  if (n > limit) throw EnumerationLimitError(n, limit);
}

void match_from(std::vector<int>& pairing, const DiagramVisitor& visit) {
  auto first = std::find(pairing.begin(), pairing.end(), 0);
  if (first == pairing.end()) {
    visit(ChordDiagram(pairing));
    return;
  }
  const int a = static_cast<int>(first - pairing.begin()) + 1;
  for (int b = a + 1; b <= static_cast<int>(pairing.size()); ++b) {
    if (pairing[static_cast<std::size_t>(b - 1)] != 0) continue;
    pairing[static_cast<std::size_t>(a - 1)] = b;
    pairing[static_cast<std::size_t>(b - 1)] = a;
    match_from(pairing, visit);
    pairing[static_cast<std::size_t>(a - 1)] = 0;
    pairing[static_cast<std::size_t>(b - 1)] = 0;
  }
}

// Keeps RCCD(m) for every m below the size being streamed.
class ConstructiveGenerator {
 public:
  const std::vector<ChordDiagram>& level(int m) {
    while (static_cast<int>(levels_.size()) < m) {
      const int next = static_cast<int>(levels_.size()) + 1;
      std::vector<ChordDiagram> all;
      stream(next, [&](const ChordDiagram& c) { all.push_back(c); });
      levels_.push_back(std::move(all));
    }
    return levels_[static_cast<std::size_t>(m - 1)];
  }

  void stream(int n, const DiagramVisitor& visit) {
    if (n == 1) {
      visit(ChordDiagram::single_chord());
      return;
    }
    for (int k = 1; k < n; ++k) {
      const int rest = n - k;
      level(std::max(k, rest));
      const auto& shares = levels_[static_cast<std::size_t>(k - 1)];
      const auto& remainders = levels_[static_cast<std::size_t>(rest - 1)];
      for (const auto& c1 : shares) {
        for (const auto& c2 : remainders) {
          for (int i = 1; i <= 2 * rest - 1; ++i) visit(insert(c1, c2, i));
        }
      }
    }
  }

 private:
  std::vector<std::vector<ChordDiagram>> levels_;
};

int env_limit(const char* name, int fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  try {
    std::size_t used = 0;
    const int v = std::stoi(raw, &used);
    if (used != std::string(raw).size() || v < 1) throw std::invalid_argument(name);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("invalid value for ") + name + ": " + raw);
  }
}

}  // namespace

EnumerationLimitError::EnumerationLimitError(int n, int limit)
    : std::length_error("n = " + std::to_string(n) + " exceeds the enumeration limit " + std::to_string(limit)),
      requested_(n),
      limit_(limit) {}

EnumerationLimits EnumerationLimits::from_environment() {
  EnumerationLimits l;
  l.bruteforce = env_limit("CHORDEXP_BRUTEFORCE_LIMIT", l.bruteforce);
  l.constructive = env_limit("CHORDEXP_CONSTRUCTIVE_LIMIT", l.constructive);
  return l;
}

void for_each_matching(int n, const DiagramVisitor& visit) {
  if (n < 1) throw std::invalid_argument("diagram size must be positive");
  std::vector<int> pairing(static_cast<std::size_t>(2 * n), 0);
  match_from(pairing, visit);
}

std::vector<ChordDiagram> enumerate_bruteforce(int n, int limit) {
  require_size(n, limit);
  std::vector<ChordDiagram> out;
  for_each_matching(n, [&](const ChordDiagram& c) {
    if (c.is_connected()) out.push_back(c);
  });
  std::sort(out.begin(), out.end());
  return out;
}

void for_each_constructive(int n, const DiagramVisitor& visit, int limit) {
  require_size(n, limit);
  ConstructiveGenerator gen;
  gen.stream(n, visit);
}

std::vector<ChordDiagram> enumerate_constructive(int n, int limit) {
  std::vector<ChordDiagram> out;
  for_each_constructive(n, [&](const ChordDiagram& c) { out.push_back(c); }, limit);
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw std::logic_error("constructive enumeration produced a duplicate diagram");
  }
  return out;
}

DiagramCensus::DiagramCensus(int max_n, int limit) {
  require_size(max_n, limit);
  ConstructiveGenerator gen;
  by_size_.resize(static_cast<std::size_t>(max_n));
  for (int n = 1; n <= max_n; ++n) {
    auto& table = by_size_[static_cast<std::size_t>(n - 1)];
    gen.stream(n, [&](const ChordDiagram& c) {
      const DiagramStats s = stats(c);
      table[CensusKey{s.b, s.monomial}] += 1;
    });
  }
}

const std::map<CensusKey, BigInt>& DiagramCensus::at(int n) const {
  if (n < 1 || n > max_size()) throw std::out_of_range("size not covered by the census");
  return by_size_[static_cast<std::size_t>(n - 1)];
}

BigInt DiagramCensus::count(int n) const { return count_with_b_at_least(n, 1); }

BigInt DiagramCensus::count_with_b_at_least(int n, int k) const {
  BigInt total = 0;
  for (const auto& [key, count] : at(n)) {
    if (key.b >= k) total += count;
  }
  return total;
}

CountTable stein_counts(int max_n, const DiagramCensus& census) {
  if (max_n < 1) throw std::invalid_argument("count table needs max_n >= 1");
  CountTable t;
  t.counts.assign(static_cast<std::size_t>(max_n), 0);
  t.nijenhuis_wilf.assign(static_cast<std::size_t>(max_n), 0);
  t.counts[0] = t.nijenhuis_wilf[0] = 1;
  for (int n = 2; n <= max_n; ++n) {
    BigInt stein = 0, nw = 0;
    for (int k = 1; k < n; ++k) {
      stein += t.counts[static_cast<std::size_t>(k - 1)] * t.counts[static_cast<std::size_t>(n - k - 1)];
      nw += (2 * k - 1) * t.nijenhuis_wilf[static_cast<std::size_t>(k - 1)] *
            t.nijenhuis_wilf[static_cast<std::size_t>(n - k - 1)];
    }
    t.counts[static_cast<std::size_t>(n - 1)] = (n - 1) * stein;
    t.nijenhuis_wilf[static_cast<std::size_t>(n - 1)] = nw;
    if (t.counts[static_cast<std::size_t>(n - 1)] != nw) {
      throw std::logic_error("count recurrences disagree at n = " + std::to_string(n));
    }
  }
  for (int n = 1; n <= std::min(max_n, census.max_size()); ++n) {
    std::vector<BigInt> row;
    for (int k = 1; k <= n; ++k) row.push_back(census.count_with_b_at_least(n, k));
    t.counts_by_b.push_back(std::move(row));
  }
  return t;
}

CountTable stein_counts(int max_n) {
  const DiagramCensus census(std::clamp(max_n, 1, 6));
  return stein_counts(max_n, census);
}

BigInt matching_count(int n) {
  BigInt r = 1;
  for (int k = 3; k <= 2 * n - 1; k += 2) r *= k;
  return r;
}

}  // namespace chordexp
