#ifndef CWM_PRUNE_HPP
#define CWM_PRUNE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cwm/olp.hpp"

namespace cwm {

struct CountRange {
  std::int64_t min = 0;
  std::int64_t max = 0;

  friend bool operator==(const CountRange&, const CountRange&) = default;
};

/// Bounds, per orbit length, on how many elements of that length appear in
/// dP & dN (the same side) and in the cross multiset +-(P - N).
///
/// Each unordered pair of parts contributes a block of differences: an
/// intra-orbit part k gives k(k-1), two distinct parts k, l on one side give
/// 2kl, and a cross pair gives 2kl. A block counts toward max(len) whenever
/// len is a candidate length for it, and toward min(len) when len is its
/// only candidate. For t = 2 an orbit <a> of length k >= 3 also contains the
/// 2k differences +-(2^(i+1) a - 2^i a) = +-2^i a of length exactly k, so
/// min(k) gets at least min(2k, k(k-1)) from that block.
struct LengthCountBounds {
  std::map<std::int64_t, CountRange> same_side;
  std::map<std::int64_t, CountRange> cross_side;

  CountRange same(std::int64_t length) const;
  CountRange cross(std::int64_t length) const;
};

LengthCountBounds length_count_bounds(const OlpPair& pair, std::int64_t t);

enum class PruneLevel { existence, counting };
enum class PruneRule {
  /// A cross pair (k, l) only produces lengths absent from pol(dP) u pol(dN).
  cross_length_unmatched,
  /// min count on the same side exceeds the max count on the cross side.
  same_side_excess,
  /// min count on the cross side exceeds the max count on the same side.
  cross_side_excess,
};

std::string to_string(PruneLevel level);
std::string to_string(PruneRule rule);
/// Throws std::invalid_argument for anything but "existence" / "counting".
PruneLevel parse_prune_level(std::string_view text);

struct PruneWitness {
  PruneRule rule = PruneRule::cross_length_unmatched;
  /// Witnessing orbit length (the least one of `lengths` for existence).
  std::int64_t length = 0;
  /// Full candidate set behind the witness; {length} for counting rules.
  std::vector<std::int64_t> lengths;
  /// Lower bound on one side and upper bound on the other.
  std::int64_t min_count = 0;
  std::int64_t max_count = 0;
  /// Part lengths (k from olp(P), l from olp(N)) for existence witnesses.
  std::optional<std::pair<std::int64_t, std::int64_t>> parts;
};

struct PruneReport {
  OlpPair pair;
  std::optional<PruneWitness> witness;

  bool accepted() const noexcept { return !witness.has_value(); }
};

/// One report per input pair, in input order. The counting level applies
/// the existence rule first and the count comparison to what survives.
///
/// Among several firing cross pairs at the existence level the witness
/// comes from a coprime pair (k, l) when there is one, then from the
/// smallest candidate length. Counting witnesses take the smallest length.
std::vector<PruneReport> prune(std::span<const OlpPair> pairs, PruneLevel level, std::int64_t t);

std::vector<OlpPair> survivors(std::span<const PruneReport> reports);

} // namespace cwm

#endif // CWM_PRUNE_HPP
