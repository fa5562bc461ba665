#include "chordexp/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace chordexp {

FMonomial FMonomial::variable(int j, unsigned power) {
  if (j < 0) throw std::invalid_argument("symbol index must be nonnegative");
  FMonomial m;
  if (power == 0) return m;
  m.exponents_.assign(static_cast<std::size_t>(j) + 1, 0);
  m.exponents_.back() = power;
  m.degree_ = power;
  return m;
}

FMonomial FMonomial::from_indices(const std::vector<int>& indices) {
  FMonomial m;
  for (int j : indices) m *= variable(j);
  return m;
}

unsigned FMonomial::exponent(int j) const {
  if (j < 0 || j >= static_cast<int>(exponents_.size())) return 0;
  return exponents_[static_cast<std::size_t>(j)];
}

FMonomial& FMonomial::operator*=(const FMonomial& other) {
  if (other.exponents_.size() > exponents_.size()) exponents_.resize(other.exponents_.size(), 0);
  for (std::size_t j = 0; j < other.exponents_.size(); ++j) exponents_[j] += other.exponents_[j];
  degree_ += other.degree_;
  return *this;
}

std::strong_ordering FMonomial::operator<=>(const FMonomial& other) const {
  if (auto c = degree_ <=> other.degree_; c != 0) return c;
  const std::size_t len = std::max(exponents_.size(), other.exponents_.size());
  for (std::size_t j = 0; j < len; ++j) {
    const unsigned a = j < exponents_.size() ? exponents_[j] : 0;
    const unsigned b = j < other.exponents_.size() ? other.exponents_[j] : 0;
    // More weight on low indices sorts first: f0^2 < f0*f1 < f1^2.
    if (a != b) return b <=> a;
  }
  return std::strong_ordering::equal;
}

std::string FMonomial::to_string() const {
  if (is_one()) return "1";
  std::string out;
  for (std::size_t j = 0; j < exponents_.size(); ++j) {
    if (exponents_[j] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'f' + std::to_string(j);
    if (exponents_[j] > 1) out += '^' + std::to_string(exponents_[j]);
  }
  return out;
}

}  // namespace chordexp
