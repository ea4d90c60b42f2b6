#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cwm/prune.hpp"
#include "fixtures.hpp"

using namespace cwm;

namespace {

const std::vector<OlpPair>& pairs16() {
  static const auto pairs = feasible_pairs(16, 2);
  return pairs;
}

} // namespace

TEST(Prune, ExistenceLeavesElevenPairs) {
  const auto reports = prune(pairs16(), PruneLevel::existence, 2);
  ASSERT_EQ(reports.size(), 41u);
  const auto kept = survivors(reports);
  auto expected = fixtures::existence_survivors();
  auto key = [](const OlpPair& p) { return p.to_string(); };
  std::vector<std::string> got_keys, want_keys;
  for (const auto& p : kept) got_keys.push_back(key(p));
  for (const auto& p : expected) want_keys.push_back(key(p));
  std::sort(got_keys.begin(), got_keys.end());
  std::sort(want_keys.begin(), want_keys.end());
  EXPECT_EQ(got_keys, want_keys);
}

TEST(Prune, ExistenceWitnessesMatchKnownLengths) {
  const auto reports = prune(pairs16(), PruneLevel::existence, 2);
  for (auto [row, length] : fixtures::existence_witnesses()) {
    const auto& r = reports[static_cast<std::size_t>(row - 1)];
    ASSERT_TRUE(r.witness.has_value()) << "row " << row;
    EXPECT_EQ(r.witness->rule, PruneRule::cross_length_unmatched);
    EXPECT_EQ(r.witness->length, length) << "row " << row;
  }
  const auto& last = reports[40];
  ASSERT_TRUE(last.witness.has_value());
  EXPECT_EQ(last.witness->lengths, (std::vector<std::int64_t>{15, 30}));
  for (auto row : fixtures::existence_accepted_indices()) EXPECT_TRUE(reports[static_cast<std::size_t>(row - 1)].accepted()) << row;
}

TEST(Prune, CountingLeavesThree) {
  const auto kept = survivors(prune(pairs16(), PruneLevel::counting, 2));
  EXPECT_EQ(kept.size(), 3u);
  for (const auto& want : fixtures::counting_survivors())
    EXPECT_NE(std::find(kept.begin(), kept.end(), want), kept.end()) << want.to_string();
}

TEST(Prune, CountingBoundsForFirstAndThirdCases) {
  // (4^1 6^1, 1^1 2^1 3^1): 48 same-side elements of length 12 vs 24 cross.
  const auto first = length_count_bounds(fixtures::pair("4^1 6^1", "1^1 2^1 3^1"), 2);
  EXPECT_EQ(first.same(12).min, 48);
  EXPECT_EQ(first.cross(12).max, 24);

  // (1^1 9^1, 3^2): 30 same-side elements of length 3 vs 12 cross.
  const auto third = length_count_bounds(fixtures::pair("1^1 9^1", "3^2"), 2);
  EXPECT_EQ(third.same(3).min, 30);
  EXPECT_EQ(third.cross(3).max, 12);

  const auto reports = prune(std::vector<OlpPair>{fixtures::pair("1^1 9^1", "3^2")}, PruneLevel::counting, 2);
  ASSERT_TRUE(reports[0].witness.has_value());
  EXPECT_EQ(reports[0].witness->rule, PruneRule::same_side_excess);
  EXPECT_EQ(reports[0].witness->length, 3);
  EXPECT_EQ(reports[0].witness->min_count, 30);
  EXPECT_EQ(reports[0].witness->max_count, 12);
}

TEST(Prune, CountingRejectsAllButThreeExistenceSurvivors) {
  const auto reports = prune(fixtures::existence_survivors(), PruneLevel::counting, 2);
  const auto kept = fixtures::counting_survivors();
  for (const auto& r : reports) {
    const bool should_survive = std::find(kept.begin(), kept.end(), r.pair) != kept.end();
    EXPECT_EQ(r.accepted(), should_survive) << r.pair.to_string();
    if (r.witness) {
      EXPECT_NE(r.witness->rule, PruneRule::cross_length_unmatched);
      EXPECT_GT(r.witness->min_count, r.witness->max_count);
    }
  }
}

TEST(Prune, BoundsAreConsistent) {
  for (const auto& pair : pairs16()) {
    const auto bounds = length_count_bounds(pair, 2);
    std::int64_t same_total = 0, cross_total = 0;
    for (const auto& [len, range] : bounds.same_side) {
      EXPECT_LE(range.min, range.max);
      same_total += range.min;
    }
    for (const auto& [len, range] : bounds.cross_side) {
      EXPECT_LE(range.min, range.max);
      cross_total += range.min;
    }
    const auto p = pair.positive.total(), n = pair.negative.total();
    EXPECT_LE(same_total, p * (p - 1) + n * (n - 1));
    EXPECT_LE(cross_total, 2 * p * n);
  }
}

TEST(Prune, LevelNames) {
  EXPECT_EQ(parse_prune_level("existence"), PruneLevel::existence);
  EXPECT_EQ(parse_prune_level("counting"), PruneLevel::counting);
  EXPECT_EQ(to_string(PruneLevel::counting), "counting");
  EXPECT_THROW(parse_prune_level("strict"), std::invalid_argument);
}

namespace {

bool is_prime(std::int64_t x) {
  if (x < 2) return false;
  for (std::int64_t d = 2; d * d <= x; ++d)
    if (x % d == 0) return false;
  return true;
}

// The composite rejection pattern: a prime part k of olp(P) and a part
// m != 1 of olp(N) with gcd(k, m) = 1, k dividing no part of olp(N), and no
// coprime split m = m'm'' with m' | k', m'' | k'' for parts k', k'' of olp(P).
bool composite_pattern_applies(const OlpPair& pair) {
  const auto pos = pair.positive.parts();
  const auto neg = pair.negative.parts();
  for (auto k : pos) {
    if (!is_prime(k)) continue;
    for (auto m : neg) {
      if (m == 1 || std::gcd(k, m) != 1) continue;
      if (std::any_of(neg.begin(), neg.end(), [&](std::int64_t y) { return y % k == 0; })) continue;
      bool split_found = false;
      for (std::int64_t m1 = 1; m1 <= m; ++m1) {
        if (m % m1 || std::gcd(m1, m / m1) != 1) continue;
        const auto m2 = m / m1;
        for (auto k1 : pos)
          for (auto k2 : pos)
            if (k1 % m1 == 0 && k2 % m2 == 0) split_found = true;
      }
      if (!split_found) return true;
    }
  }
  return false;
}

} // namespace

TEST(Prune, CompositePatternIsSubsumedByExistence) {
  const auto reports = prune(pairs16(), PruneLevel::existence, 2);
  int applied = 0;
  for (const auto& r : reports) {
    if (!composite_pattern_applies(r.pair)) continue;
    ++applied;
    EXPECT_FALSE(r.accepted()) << r.pair.to_string();
  }
  EXPECT_GT(applied, 0);
}

TEST(Prune, ReportsKeepInputOrder) {
  const auto reports = prune(pairs16(), PruneLevel::counting, 2);
  for (std::size_t i = 0; i < reports.size(); ++i) EXPECT_EQ(reports[i].pair, pairs16()[i]);
}
