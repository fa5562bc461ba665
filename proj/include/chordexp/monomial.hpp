#pragma once

#include <compare>
#include <string>
#include <vector>

namespace chordexp {

// Monomial in the symbols f_0, f_1, f_2, ...
class FMonomial {
 public:
  FMonomial() = default;

  // f_j^power. Throws std::invalid_argument for j < 0.
  static FMonomial variable(int j, unsigned power = 1);
  // Product of f_j over the entries of `indices` (repeats allowed).
  static FMonomial from_indices(const std::vector<int>& indices);

  unsigned exponent(int j) const;
  unsigned degree() const { return degree_; }
  // Largest j with a nonzero exponent, -1 for the unit monomial.
  int max_index() const { return static_cast<int>(exponents_.size()) - 1; }
  bool is_one() const { return degree_ == 0; }
  const std::vector<unsigned>& exponents() const { return exponents_; }

  FMonomial& operator*=(const FMonomial& other);
  friend FMonomial operator*(FMonomial a, const FMonomial& b) { return a *= b; }

  // Graded: total degree first, then exponent vectors lexicographically.
  std::strong_ordering operator<=>(const FMonomial& other) const;
  bool operator==(const FMonomial& other) const = default;

  // "1", "f0^2*f3".
  std::string to_string() const;

 private:
  std::vector<unsigned> exponents_;  // trailing zeros trimmed
  unsigned degree_ = 0;
};

}  // namespace chordexp
