#ifndef CWM_TESTS_FIXTURES_HPP
#define CWM_TESTS_FIXTURES_HPP

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cwm/circulant.hpp"
#include "cwm/olp.hpp"

namespace fixtures {

inline const std::string cw_7_4 = "-++0+00";
inline const std::string cw_31_16 = "- 0 0 0 0 - 0 + 0 - - + 0 + + 0 0 0 - + - + + 0 0 + + 0 + 0 0";

struct SetRow {
  cwm::Residue n;
  std::vector<cwm::Residue> positive;
  std::vector<cwm::Residue> negative;

  cwm::CirculantRow row() const { return cwm::from_sets(n, positive, negative); }
};

inline const SetRow w1_31{31, {3, 6, 7, 12, 14, 17, 19, 24, 25, 28}, {0, 1, 2, 4, 8, 16}};
inline const SetRow w2_31{31, {5, 9, 10, 15, 18, 20, 23, 27, 29, 30}, {0, 1, 2, 4, 8, 16}};
inline const SetRow w0_21{21, {0, 5, 9, 10, 13, 15, 17, 18, 19, 20}, {1, 2, 4, 8, 11, 16}};
inline const SetRow w1_63{63, {0, 9, 13, 18, 19, 26, 36, 38, 41, 52}, {1, 2, 4, 8, 16, 32}};
inline const SetRow w2_63{63, {0, 15, 27, 30, 39, 45, 51, 54, 57, 60}, {3, 6, 12, 24, 33, 48}};
// A CW(13, 9) fixed by t = 3.
inline const SetRow cw_13_9{13, {2, 5, 6, 7, 8, 11}, {1, 3, 9}};

inline cwm::OlpPair pair(const char* p, const char* n) { return {cwm::parse_olp(p), cwm::parse_olp(n)}; }

// The 41 feasible pairs for weight 16, t = 2, in reference order.
inline std::vector<cwm::OlpPair> weight16_pairs() {
  const char* rows[][2] = {
      {"5^2", "1^1 2^1 3^1"},       {"4^1 6^1", "1^1 2^1 3^1"}, {"3^1 7^1", "1^1 2^1 3^1"},
      {"10^1", "1^1 2^1 3^1"},      {"2^1 4^2", "3^2"},         {"1^1 4^1 5^1", "3^2"},
      {"5^2", "3^2"},               {"4^1 6^1", "3^2"},         {"1^1 2^1 7^1", "3^2"},
      {"2^1 8^1", "3^2"},           {"1^1 9^1", "3^2"},         {"10^1", "3^2"},
      {"3^2 4^1", "2^1 4^1"},       {"1^1 4^1 5^1", "2^1 4^1"}, {"5^2", "2^1 4^1"},
      {"1^1 3^1 6^1", "2^1 4^1"},   {"4^1 6^1", "2^1 4^1"},     {"3^1 7^1", "2^1 4^1"},
      {"1^1 9^1", "2^1 4^1"},       {"10^1", "2^1 4^1"},        {"3^2 4^1", "1^1 5^1"},
      {"2^1 4^2", "1^1 5^1"},       {"2^1 3^1 5^1", "1^1 5^1"}, {"5^2", "1^1 5^1"},
      {"4^1 6^1", "1^1 5^1"},       {"3^1 7^1", "1^1 5^1"},     {"2^1 8^1", "1^1 5^1"},
      {"10^1", "1^1 5^1"},          {"1^1 2^1 3^1 4^1", "6^1"}, {"3^2 4^1", "6^1"},
      {"2^1 4^2", "6^1"},           {"2^1 3^1 5^1", "6^1"},     {"1^1 4^1 5^1", "6^1"},
      {"5^2", "6^1"},               {"1^1 3^1 6^1", "6^1"},     {"4^1 6^1", "6^1"},
      {"1^1 2^1 7^1", "6^1"},       {"3^1 7^1", "6^1"},         {"2^1 8^1", "6^1"},
      {"1^1 9^1", "6^1"},           {"10^1", "6^1"},
  };
  std::vector<cwm::OlpPair> out;
  for (auto& r : rows) out.push_back(pair(r[0], r[1]));
  return out;
}

// Rejection lengths by 1-based index into weight16_pairs(); row 41 lists {15, 30}.
inline std::vector<std::pair<int, std::int64_t>> existence_witnesses() {
  return {{1, 10},  {3, 14},  {4, 30},  {5, 6},   {6, 12},  {7, 15},  {9, 6},   {10, 6},  {12, 30},
          {13, 6},  {14, 10}, {15, 10}, {16, 12}, {18, 6},  {19, 18}, {20, 20}, {21, 15}, {22, 10},
          {25, 20}, {26, 15}, {27, 10}, {31, 12}, {32, 30}, {33, 30}, {34, 30}, {37, 42}, {38, 42},
          {39, 24}, {40, 18}};
}

inline std::vector<int> existence_accepted_indices() { return {2, 8, 11, 17, 23, 24, 28, 29, 30, 35, 36}; }

inline std::vector<cwm::OlpPair> existence_survivors() {
  return {pair("4^1 6^1", "1^1 2^1 3^1"), pair("4^1 6^1", "3^2"),     pair("1^1 9^1", "3^2"),
          pair("4^1 6^1", "2^1 4^1"),     pair("2^1 3^1 5^1", "1^1 5^1"), pair("5^2", "1^1 5^1"),
          pair("10^1", "1^1 5^1"),        pair("1^1 2^1 3^1 4^1", "6^1"), pair("3^2 4^1", "6^1"),
          pair("1^1 3^1 6^1", "6^1"),     pair("4^1 6^1", "6^1")};
}

inline std::vector<cwm::OlpPair> counting_survivors() {
  return {pair("4^1 6^1", "2^1 4^1"), pair("5^2", "1^1 5^1"), pair("1^1 3^1 6^1", "6^1")};
}

// Orbit lengths of every residue mod n under t, by iterating a -> t a.
inline std::vector<std::int64_t> brute_orbit_lengths(std::int64_t n, std::int64_t t) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(n));
  for (std::int64_t a = 0; a < n; ++a) {
    std::int64_t x = (a * t) % n, len = 1;
    while (x != a) {
      x = (x * t) % n;
      ++len;
    }
    out[static_cast<std::size_t>(a)] = len;
  }
  return out;
}

// Checks every ordered pair of distinct residues a, b of Z_n: ol(a - b) must
// lie in diff_length_candidates(ol(a), ol(b)). Returns false at the first
// violation; `checked` counts the pairs examined.
inline bool diff_candidates_sound(std::int64_t n, std::int64_t& checked) {
  const auto ol = brute_orbit_lengths(n, 2);
  std::map<std::int64_t, std::size_t> id;
  for (auto len : ol) id.emplace(len, 0);
  std::vector<std::int64_t> by_id;
  for (auto& [len, idx] : id) {
    idx = by_id.size();
    by_id.push_back(len);
  }
  const auto m = by_id.size();
  std::vector<char> allowed(m * m * m, 0);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (auto len : cwm::diff_length_candidates(by_id[a], by_id[b])) {
        auto it = id.find(len);
        if (it != id.end()) allowed[(a * m + b) * m + it->second] = 1;
      }
  std::vector<std::size_t> ids(static_cast<std::size_t>(n));
  for (std::int64_t x = 0; x < n; ++x) ids[x] = id[ol[x]];

  for (std::int64_t a = 0; a < n; ++a)
    for (std::int64_t b = 0; b < n; ++b) {
      if (a == b) continue;
      const auto d = a >= b ? a - b : a - b + n;
      if (!allowed[(ids[a] * m + ids[b]) * m + ids[d]]) return false;
      ++checked;
    }
  return true;
}

// W W^T computed from the full matrix; returns k if it equals k I, else -1.
inline std::int64_t dense_gram_weight(const cwm::CirculantRow& row) {
  const auto n = row.order();
  std::vector<std::vector<int>> w(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (std::int64_t r = 0; r < n; ++r)
    for (std::int64_t c = 0; c < n; ++c) w[r][c] = row[((c - r) % n + n) % n];
  std::int64_t k = -1;
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = 0; j < n; ++j) {
      std::int64_t dot = 0;
      for (std::int64_t c = 0; c < n; ++c) dot += w[i][c] * w[j][c];
      if (i == j) {
        if (k >= 0 && dot != k) return -1;
        k = dot;
      } else if (dot != 0) {
        return -1;
      }
    }
  return k;
}

inline cwm::CirculantRow random_row(std::mt19937_64& rng, std::int64_t n) {
  std::uniform_int_distribution<int> coeff(-1, 1);
  std::vector<std::int8_t> c(static_cast<std::size_t>(n));
  for (auto& x : c) x = static_cast<std::int8_t>(coeff(rng));
  return cwm::CirculantRow(std::move(c));
}

inline std::int64_t random_unit(std::mt19937_64& rng, std::int64_t n) {
  std::uniform_int_distribution<std::int64_t> pick(0, n - 1);
  for (;;) {
    const auto t = pick(rng);
    std::int64_t a = t, b = n;
    while (b) {
      a %= b;
      std::swap(a, b);
    }
    if (a == 1) return n == 1 ? 0 : t;
  }
}

} // namespace fixtures

#endif
