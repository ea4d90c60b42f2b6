#include "cwm/multiset.hpp"

#include <numeric>
#include <stdexcept>

namespace cwm {

ResidueMultiset::ResidueMultiset(Residue n) {
  if (n < 1) throw std::invalid_argument("ResidueMultiset: modulus must be >= 1");
  counts_.assign(static_cast<std::size_t>(n), 0);
}

std::int64_t ResidueMultiset::total() const noexcept {
  return std::accumulate(counts_.begin(), counts_.end(), std::int64_t{0});
}

void ResidueMultiset::add(Residue r, std::int64_t times) {
  if (times < 0) throw std::invalid_argument("ResidueMultiset::add: negative multiplicity");
  counts_.at(static_cast<std::size_t>(mod(r, modulus()))) += times;
}

bool ResidueMultiset::closed_under_negation() const {
  const Residue n = modulus();
  for (Residue r = 0; r < n; ++r)
    if (counts_[r] != counts_[mod(-r, n)]) return false;
  return true;
}

std::string ResidueMultiset::to_string() const {
  std::string out = "[";
  bool first = true;
  for (std::size_t r = 0; r < counts_.size(); ++r) {
    if (counts_[r] == 0) continue;
    if (!first) out += ", ";
    first = false;
    out += std::to_string(r);
    if (counts_[r] > 1) out += "^" + std::to_string(counts_[r]);
  }
  return out + "]";
}

namespace {

void check_range(std::span<const Residue> set, Residue n) {
  for (Residue r : set)
    if (r < 0 || r >= n)
      throw std::invalid_argument("residue " + std::to_string(r) + " outside Z_" + std::to_string(n));
}

} // namespace

ResidueMultiset delta(std::span<const Residue> set, Residue n) {
  check_range(set, n);
  ResidueMultiset out(n);
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = 0; j < set.size(); ++j)
      if (i != j) out.add(set[i] - set[j]);
  return out;
}

ResidueMultiset delta_bar(std::span<const Residue> positive, std::span<const Residue> negative,
                          Residue n) {
  check_range(positive, n);
  check_range(negative, n);
  ResidueMultiset out(n);
  for (Residue p : positive) {
    for (Residue q : negative) {
      out.add(p - q);
      out.add(q - p);
    }
  }
  return out;
}

ResidueMultiset adjoin(const ResidueMultiset& a, const ResidueMultiset& b) {
  if (a.modulus() != b.modulus())
    throw std::invalid_argument("adjoin: modulus mismatch (" + std::to_string(a.modulus()) + " vs " +
                                std::to_string(b.modulus()) + ")");
  ResidueMultiset out = a;
  for (Residue r = 0; r < b.modulus(); ++r) out.add(r, b.count(r));
  return out;
}

bool cw_equation_holds(std::span<const Residue> positive, std::span<const Residue> negative,
                       Residue n) {
  return adjoin(delta(positive, n), delta(negative, n)) == delta_bar(positive, negative, n);
}

} // namespace cwm
