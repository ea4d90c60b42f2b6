#include "cwm/circulant.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace cwm {

CirculantRow::CirculantRow(std::vector<std::int8_t> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("CirculantRow: order must be >= 1");
  for (std::int8_t c : coeffs_)
    if (c < -1 || c > 1) throw std::invalid_argument("CirculantRow: entries must be in {-1, 0, 1}");
}

CirculantRow CirculantRow::zero(Residue n) {
  if (n < 1) throw std::invalid_argument("CirculantRow::zero: order must be >= 1");
  return CirculantRow(std::vector<std::int8_t>(static_cast<std::size_t>(n), 0));
}

CirculantRow CirculantRow::identity(Residue n) {
  auto coeffs = std::vector<std::int8_t>(static_cast<std::size_t>(n), 0);
  if (n >= 1) coeffs[0] = 1;
  return CirculantRow(std::move(coeffs));
}

std::vector<Residue> CirculantRow::support() const {
  std::vector<Residue> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out.push_back(static_cast<Residue>(i));
  return out;
}

std::int64_t CirculantRow::count(std::int8_t value) const {
  return std::count(coeffs_.begin(), coeffs_.end(), value);
}

CirculantRow CirculantRow::negated() const {
  CirculantRow out = *this;
  for (auto& c : out.coeffs_) c = static_cast<std::int8_t>(-c);
  return out;
}

CirculantRow parse_sign_string(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("sign string is empty");

  std::vector<std::int8_t> coeffs;
  bool after_space = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    switch (ch) {
      case '-': coeffs.push_back(-1); after_space = false; break;
      case '+': coeffs.push_back(1); after_space = false; break;
      case '0': coeffs.push_back(0); after_space = false; break;
      case ' ':
        if (after_space)
          throw std::invalid_argument("sign string: consecutive spaces at position " + std::to_string(i));
        after_space = true;
        break;
      default:
        throw std::invalid_argument(std::string("sign string: unexpected character '") + ch +
                                    "' at position " + std::to_string(i));
    }
  }
  return CirculantRow(std::move(coeffs));
}

std::string to_sign_string(const CirculantRow& row, bool spaced) {
  std::string out;
  for (std::int8_t c : row.coeffs()) {
    if (spaced && !out.empty()) out.push_back(' ');
    out.push_back(c < 0 ? '-' : (c > 0 ? '+' : '0'));
  }
  return out;
}

std::int64_t periodic_autocorrelation(const CirculantRow& row, Residue lag) {
  const Residue n = row.order();
  if (lag < 0 || lag >= n) throw std::invalid_argument("periodic_autocorrelation: lag out of range");
  std::int64_t sum = 0;
  for (Residue i = 0; i < n; ++i) {
    Residue j = i + lag;
    if (j >= n) j -= n;
    sum += row[i] * row[j];
  }
  return sum;
}

std::optional<std::int64_t> verify_cw(const CirculantRow& row) {
  const Residue n = row.order();
  const auto support = row.support();
  // Sparse evaluation: only support pairs contribute.
  std::vector<std::int64_t> correlation(static_cast<std::size_t>(n / 2 + 1), 0);
  for (Residue i : support) {
    for (Residue j : support) {
      if (i == j) continue;
      Residue lag = mod(j - i, n);
      if (lag <= n / 2) correlation[lag] += row[i] * row[j];
    }
  }
  for (Residue lag = 1; lag <= n / 2; ++lag)
    if (correlation[lag] != 0) return std::nullopt;
  return static_cast<std::int64_t>(support.size());
}

DescribingSets describing_sets(const CirculantRow& row) {
  DescribingSets sets;
  for (Residue i = 0; i < row.order(); ++i) {
    if (row[i] > 0) sets.positive.push_back(i);
    else if (row[i] < 0) sets.negative.push_back(i);
  }
  return sets;
}

CirculantRow from_sets(Residue n, std::span<const Residue> positive,
                       std::span<const Residue> negative) {
  if (n < 1) throw std::invalid_argument("from_sets: order must be >= 1");
  std::vector<std::int8_t> coeffs(static_cast<std::size_t>(n), 0);
  auto place = [&](Residue r, std::int8_t value) {
    if (r < 0 || r >= n)
      throw std::invalid_argument("from_sets: residue " + std::to_string(r) + " outside Z_" + std::to_string(n));
    auto& slot = coeffs[static_cast<std::size_t>(r)];
    if (slot != 0) throw std::invalid_argument("from_sets: residue " + std::to_string(r) + " repeated or in both P and N");
    slot = value;
  };
  for (Residue r : positive) place(r, 1);
  for (Residue r : negative) place(r, -1);
  return CirculantRow(std::move(coeffs));
}

CirculantRow normalize_sign(const CirculantRow& row) {
  const auto plus = row.count(1);
  const auto minus = row.count(-1);
  if (plus == minus)
    throw std::invalid_argument("normalize_sign: |P| == |N| cannot occur for a weighing row of square weight");
  return plus > minus ? row : row.negated();
}

CirculantRow apply_transform(const CirculantRow& row, EquivalenceWitness witness) {
  const Residue n = row.order();
  const Residue t = mod(witness.unit, n);
  if (std::gcd(t, n) != 1) throw std::invalid_argument("apply_transform: unit must be coprime to n");
  const Residue s = mod(witness.shift, n);
  std::vector<std::int8_t> out(static_cast<std::size_t>(n), 0);
  for (Residue i = 0; i < n; ++i) {
    if (row[i] == 0) continue;
    out[static_cast<std::size_t>(mod(mul_mod(t, i, n) + s, n))] = row[i];
  }
  return CirculantRow(std::move(out));
}

EquivalenceWitness compose(Residue n, EquivalenceWitness first, EquivalenceWitness second) {
  return {mod(mul_mod(second.unit, first.shift, n) + second.shift, n),
          mul_mod(second.unit, first.unit, n)};
}

EquivalenceWitness inverse(Residue n, EquivalenceWitness witness) {
  const Residue inv = inverse_mod(witness.unit, n);
  return {mod(-mul_mod(witness.shift, inv, n), n), inv};
}

namespace {

/// All s with target == shift(source, s), i.e. target[(j + s) mod n] ==
/// source[j] for every j. Both rows must have the same order.
std::vector<Residue> matching_shifts(const CirculantRow& source, const CirculantRow& target) {
  const Residue n = source.order();
  const auto source_support = source.support();
  if (source_support.empty()) {
    if (target.count(0) != n) return {};
    std::vector<Residue> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), Residue{0});
    return all;
  }
  if (target.count(1) != source.count(1) || target.count(-1) != source.count(-1)) return {};

  const Residue anchor = source_support.front();
  std::vector<Residue> out;
  for (Residue i = 0; i < n; ++i) {
    if (target[i] != source[anchor]) continue;
    const Residue s = mod(i - anchor, n);
    const bool matches = std::all_of(source_support.begin(), source_support.end(), [&](Residue j) {
      return target[mod(j + s, n)] == source[j];
    });
    if (matches) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

std::optional<Residue> multiplier_shift(const CirculantRow& row, Residue t) {
  const auto shifts = matching_shifts(apply_transform(row, {0, t}), row);
  if (shifts.empty()) return std::nullopt;
  return shifts.front();
}

std::vector<std::pair<Residue, Residue>> multipliers(const CirculantRow& row) {
  std::vector<std::pair<Residue, Residue>> out;
  for (Residue t : units(row.order())) {
    if (auto s = multiplier_shift(row, t)) out.emplace_back(t, *s);
  }
  return out;
}

std::optional<EquivalenceWitness> are_equivalent(const CirculantRow& first,
                                                 const CirculantRow& second) {
  if (first.order() != second.order())
    throw std::invalid_argument("are_equivalent: order mismatch (" + std::to_string(first.order()) +
                                " vs " + std::to_string(second.order()) + ")");
  std::optional<EquivalenceWitness> best;
  for (Residue t : units(first.order())) {
    const auto shifts = matching_shifts(apply_transform(first, {0, t}), second);
    if (shifts.empty()) continue;
    EquivalenceWitness candidate{shifts.front(), t};
    if (!best || candidate < *best) best = candidate;
  }
  return best;
}

CirculantRow canonical_form(const CirculantRow& row, bool with_negation) {
  const Residue n = row.order();
  std::vector<std::int8_t> best;
  std::vector<std::int8_t> image(static_cast<std::size_t>(n));

  auto consider = [&](const CirculantRow& source) {
    const auto low = *std::min_element(source.coeffs().begin(), source.coeffs().end());
    for (Residue t : units(n)) {
      const CirculantRow scaled = apply_transform(source, {0, t});
      // A least image has the least coefficient at index 0, which pins the
      // shift to the positions holding that coefficient.
      for (Residue j = 0; j < n; ++j) {
        if (scaled[j] != low) continue;
        for (Residue i = 0; i < n; ++i) image[i] = scaled[mod(i + j, n)];
        if (best.empty() || image < best) best = image;
      }
    }
  };
  consider(row);
  if (with_negation) consider(row.negated());
  return CirculantRow(std::move(best));
}

} // namespace cwm
