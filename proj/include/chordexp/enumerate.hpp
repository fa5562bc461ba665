#pragma once

#include "chordexp/chord_diagram.hpp"
#include "chordexp/rational.hpp"

#include <compare>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

namespace chordexp {

class EnumerationLimitError : public std::length_error {
 public:
  EnumerationLimitError(int n, int limit);
  int requested() const { return requested_; }
  int limit() const { return limit_; }

 private:
  int requested_;
  int limit_;
};

struct EnumerationLimits {
  int bruteforce = 7;
  int constructive = 9;

  // Defaults, overridden by CHORDEXP_BRUTEFORCE_LIMIT / CHORDEXP_CONSTRUCTIVE_LIMIT.
  static EnumerationLimits from_environment();
};

using DiagramVisitor = std::function<void(const ChordDiagram&)>;

// Every perfect matching on 2n points, connected or not.
void for_each_matching(int n, const DiagramVisitor& visit);

// Connected diagrams among all matchings, sorted. Throws EnumerationLimitError.
std::vector<ChordDiagram> enumerate_bruteforce(int n, int limit = EnumerationLimits{}.bruteforce);

// Every insert(C1, C2, i) with |C1| + |C2| = n, each diagram once, unsorted.
void for_each_constructive(int n, const DiagramVisitor& visit, int limit = EnumerationLimits{}.constructive);

// Sorted. Throws std::logic_error if the construction ever repeats a diagram.
std::vector<ChordDiagram> enumerate_constructive(int n, int limit = EnumerationLimits{}.constructive);

struct CensusKey {
  int b;
  FMonomial monomial;
  auto operator<=>(const CensusKey&) const = default;
};

// For each size n, how many RCCDs share a given (b, f_C).
class DiagramCensus {
 public:
  explicit DiagramCensus(int max_n, int limit = EnumerationLimits{}.constructive);

  int max_size() const { return static_cast<int>(by_size_.size()); }
  const std::map<CensusKey, BigInt>& at(int n) const;
  BigInt count(int n) const;
  BigInt count_with_b_at_least(int n, int k) const;

 private:
  std::vector<std::map<CensusKey, BigInt>> by_size_;
};

struct CountTable {
  std::vector<BigInt> counts;          // counts[n-1] = c_n, Stein form
  std::vector<BigInt> nijenhuis_wilf;  // same numbers, second form
  // counts_by_b[n-1][k-1] = #{C : |C| = n, b(C) >= k}; only filled for small n
  std::vector<std::vector<BigInt>> counts_by_b;

  const BigInt& c(int n) const { return counts.at(static_cast<std::size_t>(n - 1)); }
};

// Both recurrences; throws std::logic_error if they ever disagree.
// counts_by_b comes from `census` for n <= census.max_size().
CountTable stein_counts(int max_n, const DiagramCensus& census);
CountTable stein_counts(int max_n);

// (2n-1)!!
BigInt matching_count(int n);

}  // namespace chordexp
