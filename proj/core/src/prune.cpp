#include "cwm/prune.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cwm {

CountRange LengthCountBounds::same(std::int64_t length) const {
  auto it = same_side.find(length);
  return it == same_side.end() ? CountRange{} : it->second;
}

CountRange LengthCountBounds::cross(std::int64_t length) const {
  auto it = cross_side.find(length);
  return it == cross_side.end() ? CountRange{} : it->second;
}

namespace {

struct Block {
  std::vector<std::int64_t> candidates;
  std::int64_t size = 0;
  std::int64_t intra_length = 0;  // nonzero for an intra-orbit block
};

std::vector<Block> same_side_blocks(const Olp& olp) {
  std::vector<Block> out;
  const auto parts = olp.parts();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto k = parts[i];
    if (k > 1) out.push_back({diff_length_candidates(k, k), k * (k - 1), k});
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      out.push_back({diff_length_candidates(k, parts[j]), 2 * k * parts[j], 0});
  }
  return out;
}

std::vector<Block> cross_blocks(const OlpPair& pair) {
  std::vector<Block> out;
  for (auto k : pair.positive.parts())
    for (auto l : pair.negative.parts()) out.push_back({diff_length_candidates(k, l), 2 * k * l, 0});
  return out;
}

void accumulate(std::map<std::int64_t, CountRange>& side, const std::vector<Block>& blocks, std::int64_t t) {
  for (const auto& block : blocks) {
    for (auto len : block.candidates) side[len].max += block.size;
    if (block.candidates.size() == 1) {
      side[block.candidates.front()].min += block.size;
    } else if (t == 2 && block.intra_length >= 3) {
      const auto k = block.intra_length;
      if (std::find(block.candidates.begin(), block.candidates.end(), k) != block.candidates.end())
        side[k].min += std::min(2 * k, block.size);
    }
  }
}

} // namespace

LengthCountBounds length_count_bounds(const OlpPair& pair, std::int64_t t) {
  std::vector<Block> same = same_side_blocks(pair.positive);
  auto negative_blocks = same_side_blocks(pair.negative);
  same.insert(same.end(), negative_blocks.begin(), negative_blocks.end());

  LengthCountBounds bounds;
  accumulate(bounds.same_side, same, t);
  accumulate(bounds.cross_side, cross_blocks(pair), t);
  return bounds;
}

std::string to_string(PruneLevel level) {
  return level == PruneLevel::existence ? "existence" : "counting";
}

std::string to_string(PruneRule rule) {
  switch (rule) {
    case PruneRule::cross_length_unmatched: return "cross-length-unmatched";
    case PruneRule::same_side_excess: return "same-side-excess";
    case PruneRule::cross_side_excess: return "cross-side-excess";
  }
  return "unknown";
}

PruneLevel parse_prune_level(std::string_view text) {
  if (text == "existence") return PruneLevel::existence;
  if (text == "counting") return PruneLevel::counting;
  throw std::invalid_argument("unknown prune level '" + std::string(text) + "'");
}

namespace {

std::optional<PruneWitness> existence_witness(const OlpPair& pair) {
  std::set<std::int64_t> same_lengths;
  for (auto len : pol_delta(pair.positive)) same_lengths.insert(len);
  for (auto len : pol_delta(pair.negative)) same_lengths.insert(len);

  std::optional<PruneWitness> best;
  auto rank = [](const PruneWitness& w) {
    const bool coprime = std::gcd(w.parts->first, w.parts->second) == 1;
    return std::make_pair(coprime ? 0 : 1, w.length);
  };
  for (auto k : pair.positive.parts()) {
    for (auto l : pair.negative.parts()) {
      auto candidates = diff_length_candidates(k, l);
      if (candidates.empty()) continue;
      const bool disjoint = std::none_of(candidates.begin(), candidates.end(),
                                         [&](std::int64_t len) { return same_lengths.count(len) > 0; });
      if (!disjoint) continue;
      PruneWitness w;
      w.rule = PruneRule::cross_length_unmatched;
      w.length = candidates.front();
      w.lengths = std::move(candidates);
      w.min_count = 2 * k * l;
      w.max_count = 0;
      w.parts = std::make_pair(k, l);
      if (!best || rank(w) < rank(*best)) best = std::move(w);
    }
  }
  return best;
}

std::optional<PruneWitness> counting_witness(const OlpPair& pair, std::int64_t t) {
  const auto bounds = length_count_bounds(pair, t);
  std::set<std::int64_t> lengths;
  for (const auto& [len, _] : bounds.same_side) lengths.insert(len);
  for (const auto& [len, _] : bounds.cross_side) lengths.insert(len);

  for (auto len : lengths) {
    const auto same = bounds.same(len);
    const auto cross = bounds.cross(len);
    if (same.min > cross.max)
      return PruneWitness{PruneRule::same_side_excess, len, {len}, same.min, cross.max, std::nullopt};
    if (cross.min > same.max)
      return PruneWitness{PruneRule::cross_side_excess, len, {len}, cross.min, same.max, std::nullopt};
  }
  return std::nullopt;
}

} // namespace

std::vector<PruneReport> prune(std::span<const OlpPair> pairs, PruneLevel level, std::int64_t t) {
  std::vector<PruneReport> out;
  out.reserve(pairs.size());
  for (const auto& pair : pairs) {
    PruneReport report{pair, existence_witness(pair)};
    if (!report.witness && level == PruneLevel::counting) report.witness = counting_witness(pair, t);
    out.push_back(std::move(report));
  }
  return out;
}

std::vector<OlpPair> survivors(std::span<const PruneReport> reports) {
  std::vector<OlpPair> out;
  for (const auto& r : reports)
    if (r.accepted()) out.push_back(r.pair);
  return out;
}

} // namespace cwm
