#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace chordexp {

struct Violation {
  std::string where;
  std::string detail;
};

// Outcome of one exhaustive check. It passes iff there are no violations.
struct CheckReport {
  explicit CheckReport(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  std::size_t cases = 0;
  std::vector<Violation> violations;
  std::vector<std::string> notes;

  bool passed() const { return violations.empty(); }
  void fail(std::string where, std::string detail) { violations.push_back({std::move(where), std::move(detail)}); }
};

}  // namespace chordexp
