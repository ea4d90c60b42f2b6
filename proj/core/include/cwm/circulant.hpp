#ifndef CWM_CIRCULANT_HPP
#define CWM_CIRCULANT_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cwm/residue.hpp"

namespace cwm {

/// First row (w_0, ..., w_{n-1}) of a circulant {-1, 0, +1} matrix, i.e. the
/// Hall polynomial w_0 + w_1 x + ... + w_{n-1} x^{n-1} in Z[x]/(x^n - 1).
///
/// Rows order lexicographically with -1 < 0 < +1, index 0 first.
class CirculantRow {
public:
  CirculantRow() = default;

  /// Throws std::invalid_argument on an empty row or an entry outside {-1, 0, 1}.
  explicit CirculantRow(std::vector<std::int8_t> coeffs);

  static CirculantRow zero(Residue n);
  /// The identity row (1, 0, ..., 0).
  static CirculantRow identity(Residue n);

  Residue order() const noexcept { return static_cast<Residue>(coeffs_.size()); }
  std::int8_t operator[](Residue i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  std::span<const std::int8_t> coeffs() const noexcept { return coeffs_; }

  /// Indices with nonzero coefficient, increasing.
  std::vector<Residue> support() const;
  std::int64_t count(std::int8_t value) const;

  CirculantRow negated() const;

  friend bool operator==(const CirculantRow&, const CirculantRow&) = default;
  friend auto operator<=>(const CirculantRow& a, const CirculantRow& b) {
    return a.coeffs_ <=> b.coeffs_;
  }

private:
  std::vector<std::int8_t> coeffs_;
};

/// Parses the sign-string format: characters '-', '+', '0' read as
/// w_0 ... w_{n-1}, optionally separated by single spaces. Surrounding
/// whitespace is ignored. Throws std::invalid_argument on malformed input.
CirculantRow parse_sign_string(std::string_view text);

/// Compact sign string ("-++0+00"), or space-separated when `spaced`.
std::string to_sign_string(const CirculantRow& row, bool spaced = false);

/// Sum_i w_i * w_{(i + lag) mod n}. Throws std::invalid_argument unless
/// 0 <= lag < n.
std::int64_t periodic_autocorrelation(const CirculantRow& row, Residue lag);

/// Weight k if W W^T = k I, otherwise nullopt. Only lags 1..floor(n/2) are
/// checked; the remaining lags are their complements.
std::optional<std::int64_t> verify_cw(const CirculantRow& row);

/// Positive (P) and negative (N) describing sets, both sorted.
struct DescribingSets {
  std::vector<Residue> positive;
  std::vector<Residue> negative;

  friend bool operator==(const DescribingSets&, const DescribingSets&) = default;
};

DescribingSets describing_sets(const CirculantRow& row);

/// Inverse of describing_sets. Throws std::invalid_argument if P and N
/// overlap or contain residues outside [0, n).
CirculantRow from_sets(Residue n, std::span<const Residue> positive,
                       std::span<const Residue> negative);

/// Returns whichever of row, -row has more +1 entries. Throws
/// std::invalid_argument when |P| == |N|, which no weighing row of square
/// weight can satisfy.
CirculantRow normalize_sign(const CirculantRow& row);

/// The pair (s, t) of x^s w(x^t): a shift s in Z_n and a unit t in Z_n^*.
struct EquivalenceWitness {
  Residue shift = 0;
  Residue unit = 1;

  friend bool operator==(const EquivalenceWitness&, const EquivalenceWitness&) = default;
  friend auto operator<=>(const EquivalenceWitness&, const EquivalenceWitness&) = default;
};

/// x^s w(x^t): the coefficient at i moves to (t*i + s) mod n. Throws
/// std::invalid_argument when gcd(t, n) != 1.
CirculantRow apply_transform(const CirculantRow& row, EquivalenceWitness witness);

/// Witness w with apply_transform(apply_transform(r, a), b) ==
/// apply_transform(r, compose(a, b)).
EquivalenceWitness compose(Residue n, EquivalenceWitness first, EquivalenceWitness second);
EquivalenceWitness inverse(Residue n, EquivalenceWitness witness);

/// Least shift s with row == x^s row(x^t), or nullopt if t is not a
/// multiplier. s == 0 means t is a fixing multiplier.
std::optional<Residue> multiplier_shift(const CirculantRow& row, Residue t);

/// Every unit t of Z_n (the trivial t = 1 included) that is a multiplier,
/// paired with its least shift, in increasing t.
std::vector<std::pair<Residue, Residue>> multipliers(const CirculantRow& row);

/// Lexicographically least (s, t) with second == apply_transform(first, (s, t)).
/// Throws std::invalid_argument on order mismatch.
std::optional<EquivalenceWitness> are_equivalent(const CirculantRow& first,
                                                 const CirculantRow& second);

/// Least row of the equivalence orbit {x^s w(x^t)}. With `with_negation`
/// the orbit of -w is included as well.
CirculantRow canonical_form(const CirculantRow& row, bool with_negation = false);

} // namespace cwm

#endif // CWM_CIRCULANT_HPP
