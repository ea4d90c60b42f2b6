#ifndef CWM_MULTISET_HPP
#define CWM_MULTISET_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cwm/residue.hpp"

namespace cwm {

/// Multiset over Z_n stored as a dense count vector.
class ResidueMultiset {
public:
  explicit ResidueMultiset(Residue n);

  Residue modulus() const noexcept { return static_cast<Residue>(counts_.size()); }
  std::int64_t count(Residue r) const { return counts_.at(static_cast<std::size_t>(r)); }
  std::int64_t total() const noexcept;
  bool empty() const noexcept { return total() == 0; }

  void add(Residue r, std::int64_t times = 1);

  /// True iff count(r) == count(-r) for every r.
  bool closed_under_negation() const;

  /// "[a^2, b, c^3]" style rendering; exponents of 1 omitted.
  std::string to_string() const;

  friend bool operator==(const ResidueMultiset&, const ResidueMultiset&) = default;

private:
  std::vector<std::int64_t> counts_;
};

/// [x1 - x2 | x1, x2 in X, x1 != x2]; total count |X| (|X| - 1).
ResidueMultiset delta(std::span<const Residue> set, Residue n);

/// [+-(p - q) | p in P, q in N]; total count 2 |P| |N|.
ResidueMultiset delta_bar(std::span<const Residue> positive, std::span<const Residue> negative,
                          Residue n);

/// Adjunction: counts add. Throws std::invalid_argument on modulus mismatch.
ResidueMultiset adjoin(const ResidueMultiset& a, const ResidueMultiset& b);

/// delta(P) & delta(N) == delta_bar(P, N).
///
/// For {-1, 0, +1} rows this is exactly the vanishing of every nonzero-lag
/// periodic autocorrelation: the lag-j autocorrelation is the number of
/// equal-sign pairs at distance j minus the number of opposite-sign pairs.
bool cw_equation_holds(std::span<const Residue> positive, std::span<const Residue> negative,
                       Residue n);

} // namespace cwm

#endif // CWM_MULTISET_HPP
