#include "cwm/olp.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cwm {

Olp::Olp(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
  for (auto p : parts_)
    if (p < 1) throw std::invalid_argument("Olp: parts must be positive");
  std::sort(parts_.begin(), parts_.end());
}

std::int64_t Olp::total() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

std::int64_t Olp::multiplicity(std::int64_t length) const noexcept {
  return std::count(parts_.begin(), parts_.end(), length);
}

std::vector<std::pair<std::int64_t, std::int64_t>> Olp::runs() const {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (auto p : parts_) {
    if (!out.empty() && out.back().first == p) ++out.back().second;
    else out.emplace_back(p, 1);
  }
  return out;
}

std::string Olp::to_string() const {
  std::string out;
  for (auto [length, mult] : runs()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(length) + '^' + std::to_string(mult);
  }
  return out;
}

namespace {

std::int64_t parse_positive(std::string_view token, std::string_view whole) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || value < 1)
    throw std::invalid_argument("olp: bad token '" + std::string(token) + "' in \"" + std::string(whole) + "\"");
  return value;
}

} // namespace

Olp parse_olp(std::string_view text) {
  std::vector<std::int64_t> parts;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ' || text[pos] == '\t' || text[pos] == ',') {
      ++pos;
      continue;
    }
    std::size_t end = text.find_first_of(" \t,", pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view token = text.substr(pos, end - pos);
    const std::size_t caret = token.find('^');
    const std::int64_t length = parse_positive(token.substr(0, caret), text);
    const std::int64_t mult = caret == std::string_view::npos ? 1 : parse_positive(token.substr(caret + 1), text);
    parts.insert(parts.end(), static_cast<std::size_t>(mult), length);
    pos = end;
  }
  return Olp(std::move(parts));
}

bool partition_order(const Olp& a, const Olp& b) {
  return std::lexicographical_compare(a.parts().rbegin(), a.parts().rend(), b.parts().rbegin(),
                                      b.parts().rend());
}

std::string OlpPair::to_string() const {
  return "(" + positive.to_string() + ", " + negative.to_string() + ")";
}

namespace {

void partitions_into(std::int64_t remaining, std::int64_t max_part, std::vector<std::int64_t>& current,
                     std::vector<Olp>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (std::int64_t p = std::min(remaining, max_part); p >= 1; --p) {
    current.push_back(p);
    partitions_into(remaining - p, p, current, out);
    current.pop_back();
  }
}

} // namespace

std::vector<Olp> enumerate_partitions(std::int64_t total, std::int64_t max_part) {
  if (total < 0 || max_part < 1) throw std::invalid_argument("enumerate_partitions: bad arguments");
  std::vector<Olp> out;
  std::vector<std::int64_t> current;
  partitions_into(total, max_part, current, out);
  std::sort(out.begin(), out.end(), partition_order);
  return out;
}

std::optional<Olp> orbit_length_partition(std::span<const Residue> set, const ModulusContext& ctx) {
  std::set<Residue> remaining;
  for (Residue r : set) remaining.insert(ctx.reduce(r));
  if (remaining.size() != set.size()) return std::nullopt;

  std::vector<std::int64_t> lengths;
  while (!remaining.empty()) {
    const Orbit orbit = orbit_of(*remaining.begin(), ctx);
    for (Residue e : orbit.elements) {
      if (remaining.erase(e) == 0) return std::nullopt;
    }
    lengths.push_back(static_cast<std::int64_t>(orbit.length()));
  }
  return Olp(std::move(lengths));
}

std::optional<std::int64_t> square_root(std::int64_t weight) {
  if (weight < 0) return std::nullopt;
  std::int64_t s = 0;
  while ((s + 1) * (s + 1) <= weight) ++s;
  if (s * s != weight) return std::nullopt;
  return s;
}

bool cap_feasible(const OlpPair& pair, std::int64_t t) {
  std::vector<std::int64_t> combined(pair.positive.parts().begin(), pair.positive.parts().end());
  combined.insert(combined.end(), pair.negative.parts().begin(), pair.negative.parts().end());
  for (auto [length, mult] : Olp(std::move(combined)).runs())
    if (mult > orbit_count_cap(length, t)) return false;
  return true;
}

std::vector<OlpPair> feasible_pairs(std::int64_t weight, std::int64_t t) {
  const auto s = square_root(weight);
  if (!s) throw std::invalid_argument("weight " + std::to_string(weight) + " is not a perfect square");
  const std::int64_t p_size = *s * (*s + 1) / 2;
  const std::int64_t n_size = *s * (*s - 1) / 2;

  const auto p_partitions = enumerate_partitions(p_size, std::max<std::int64_t>(p_size, 1));
  const auto n_partitions = enumerate_partitions(n_size, std::max<std::int64_t>(n_size, 1));
  std::vector<OlpPair> out;
  for (const auto& negative : n_partitions) {
    for (const auto& positive : p_partitions) {
      OlpPair pair{positive, negative};
      if (cap_feasible(pair, t)) out.push_back(std::move(pair));
    }
  }
  return out;
}

std::vector<std::int64_t> diff_length_candidates(std::int64_t k, std::int64_t l) {
  if (k < 1 || l < 1) throw std::invalid_argument("diff_length_candidates: lengths must be positive");
  const std::int64_t bound = std::lcm(k, l);
  std::vector<std::int64_t> out;
  for (std::int64_t m : divisors(bound)) {
    if (m == 1) continue;
    if (std::lcm(l, m) % k == 0 && std::lcm(m, k) % l == 0) out.push_back(m);
  }
  return out;
}

namespace {

void merge_into(std::set<std::int64_t>& acc, const std::vector<std::int64_t>& values) {
  acc.insert(values.begin(), values.end());
}

} // namespace

std::vector<std::int64_t> pol_delta(const Olp& olp) {
  std::set<std::int64_t> acc;
  const auto parts = olp.parts();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] > 1) merge_into(acc, diff_length_candidates(parts[i], parts[i]));
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      merge_into(acc, diff_length_candidates(parts[i], parts[j]));
  }
  return {acc.begin(), acc.end()};
}

std::vector<std::int64_t> pol_delta_bar(const OlpPair& pair) {
  std::set<std::int64_t> acc;
  for (auto k : pair.positive.parts())
    for (auto l : pair.negative.parts()) merge_into(acc, diff_length_candidates(k, l));
  return {acc.begin(), acc.end()};
}

} // namespace cwm
