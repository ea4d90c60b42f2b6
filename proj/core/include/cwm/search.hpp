#ifndef CWM_SEARCH_HPP
#define CWM_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cwm/circulant.hpp"
#include "cwm/olp.hpp"

namespace cwm {

/// Search problem: CW(n, weight) rows fixed by the multiplier t whose
/// describing sets have the orbit length partitions in `pair`.
struct SearchSpec {
  Residue n = 1;
  std::int64_t weight = 0;
  Residue t = 2;
  OlpPair pair;

  /// Throws std::invalid_argument unless gcd(t, n) == 1, the weight is a
  /// perfect square s^2 and the partitions sum to s(s+1)/2 and s(s-1)/2.
  void validate() const;
};

struct SearchOptions {
  unsigned jobs = 1;
  /// Treat w and -w as equivalent when classifying.
  bool with_negation = false;
};

struct EquivalenceClass {
  CirculantRow representative;  // canonical form
  std::int64_t members = 0;
};

struct SearchReport {
  SearchSpec spec;
  std::int64_t candidates_tested = 0;
  /// Sign-normalized, deduplicated, ordered by canonical form then row.
  std::vector<CirculantRow> solutions;
  std::vector<EquivalenceClass> classes;
};

/// The orders n0 that a CW of any order with this pair contracts to: the
/// divisors of lcm(t^i - 1) over the pair's orbit lengths i at which every
/// length has enough orbits (as given by required_divisors). Sorted
/// ascending; the largest is a multiple of all others. Throws
/// std::invalid_argument for orbit lengths above 10.
std::vector<Residue> base_orders(const OlpPair& pair, Residue t);

/// Tests every assignment of distinct t-orbits to the parts of olp(P) and
/// olp(N). Orbits for equal parts on one side are chosen as unordered
/// selections; the two sides are ordered.
SearchReport exhaustive_search(const SearchSpec& spec, const SearchOptions& options = {});

/// Partition into equivalence classes keyed by canonical form, in
/// ascending canonical order. Throws std::invalid_argument on mixed orders.
std::vector<EquivalenceClass> classify(std::span<const CirculantRow> rows, bool with_negation = false);

/// w(x^m): order n*m, coefficient of index i moved to i*m.
CirculantRow lift(const CirculantRow& row, std::int64_t m);

struct Contraction {
  CirculantRow base;
  std::int64_t factor = 1;
};

/// The largest m with row == lift(base, m): m = gcd(n, support indices).
/// Throws std::invalid_argument on the zero row.
Contraction contract(const CirculantRow& row);

/// A member of the equivalence class of `row` whose support indices are all
/// divisible by d, found by scanning every x^s w(x^t). Throws
/// std::invalid_argument unless d divides the order.
std::optional<CirculantRow> contractible_member(const CirculantRow& row, std::int64_t d);
bool class_contractible(const CirculantRow& row, std::int64_t d);

struct Classification {
  Residue n = 1;
  std::int64_t weight = 0;
  std::int64_t class_count = 0;
  std::vector<CirculantRow> representatives;
};

/// Class count for weight 16 and odd n by the divisibility rules:
/// 31 | n contributes two classes, 21 | n one, and 63 | n one more.
std::int64_t weight16_class_count(Residue n);

/// Weight-16 classification of odd n by rule. Representatives are lifts of
/// the base classes at orders 21, 31 and 63, which are themselves obtained
/// by exhaustive search at 31 and 63 (once per process). Throws
/// std::invalid_argument for weight != 16 or even n.
Classification full_classification(std::int64_t weight, Residue n);

/// Classification of CW(n, weight) computed directly: prune the pairs at
/// counting level, search every survivor at order n and classify the union.
/// Needs weight = p^(2m) for a prime p coprime to n (p is the multiplier).
Classification search_classification(std::int64_t weight, Residue n, const SearchOptions& options = {});

} // namespace cwm

#endif // CWM_SEARCH_HPP
