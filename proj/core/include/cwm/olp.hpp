#ifndef CWM_OLP_HPP
#define CWM_OLP_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cwm/residue.hpp"

namespace cwm {

/// Orbit length partition: the multiset of t-orbit lengths making up a
/// describing set. Parts are kept in nondecreasing order.
class Olp {
public:
  Olp() = default;
  /// Throws std::invalid_argument on a non-positive part.
  explicit Olp(std::vector<std::int64_t> parts);

  std::span<const std::int64_t> parts() const noexcept { return parts_; }
  std::int64_t total() const noexcept;
  std::int64_t largest() const noexcept { return parts_.empty() ? 0 : parts_.back(); }
  std::int64_t multiplicity(std::int64_t length) const noexcept;
  bool empty() const noexcept { return parts_.empty(); }

  /// (length, multiplicity) runs in increasing length.
  std::vector<std::pair<std::int64_t, std::int64_t>> runs() const;

  /// "1^1 5^1"; the empty partition renders as "".
  std::string to_string() const;

  friend bool operator==(const Olp&, const Olp&) = default;

private:
  std::vector<std::int64_t> parts_;
};

/// Parses space-separated "length^multiplicity" tokens ("1^1 5^1"); a bare
/// "length" token counts once. Throws std::invalid_argument.
Olp parse_olp(std::string_view text);

/// Enumeration order: lexicographic on the parts listed largest first, so
/// 1^6 < 1^4 2^1 < 1^2 2^2 < 2^3 < 1^3 3^1 < ...
bool partition_order(const Olp& a, const Olp& b);

struct OlpPair {
  Olp positive;
  Olp negative;

  std::string to_string() const;
  friend bool operator==(const OlpPair&, const OlpPair&) = default;
};

/// Integer partitions of `total` with parts <= max_part, in partition_order.
/// total == 0 yields the single empty partition.
std::vector<Olp> enumerate_partitions(std::int64_t total, std::int64_t max_part);

/// Orbit length partition of `set` under ctx, or nullopt if `set` is not a
/// union of t-orbits.
std::optional<Olp> orbit_length_partition(std::span<const Residue> set, const ModulusContext& ctx);

/// s with s^2 == weight, or nullopt when weight is not a perfect square.
std::optional<std::int64_t> square_root(std::int64_t weight);

/// True iff every orbit length occurs in olp(P) and olp(N) combined no more
/// often than orbit_count_cap allows.
bool cap_feasible(const OlpPair& pair, std::int64_t t);

/// Every pair (olp(P), olp(N)) for weight s^2 with |P| = s(s+1)/2 and
/// |N| = s(s-1)/2 that passes cap_feasible, ordered by olp(N) first and then
/// olp(P), both in partition_order. Throws std::invalid_argument for a
/// non-square weight.
std::vector<OlpPair> feasible_pairs(std::int64_t weight, std::int64_t t);

/// Possible orbit lengths of a - b for distinct a, b with ol(a) = k and
/// ol(b) = l: every m > 1 with m | lcm(k, l), k | lcm(l, m), l | lcm(m, k).
/// Sorted ascending.
std::vector<std::int64_t> diff_length_candidates(std::int64_t k, std::int64_t l);

/// Possible orbit lengths occurring in the difference multiset of a set
/// with the given orbit length partition.
std::vector<std::int64_t> pol_delta(const Olp& olp);

/// Possible orbit lengths occurring in the cross differences +-(p - q).
std::vector<std::int64_t> pol_delta_bar(const OlpPair& pair);

} // namespace cwm

#endif // CWM_OLP_HPP
