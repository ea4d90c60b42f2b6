#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "cwm/circulant.hpp"
#include "fixtures.hpp"

using namespace cwm;

TEST(SignString, ParsesCompactAndSpaced) {
  const auto row = parse_sign_string(fixtures::cw_7_4);
  EXPECT_EQ(row.order(), 7);
  EXPECT_EQ(row[0], -1);
  EXPECT_EQ(row[1], 1);
  EXPECT_EQ(row[3], 0);
  EXPECT_EQ(parse_sign_string(" - + + 0 + 0 0 "), row);
  EXPECT_EQ(to_sign_string(row), "-++0+00");
  EXPECT_EQ(to_sign_string(row, true), "- + + 0 + 0 0");
}

TEST(SignString, RejectsMalformedInput) {
  EXPECT_THROW(parse_sign_string(""), std::invalid_argument);
  EXPECT_THROW(parse_sign_string("+-x"), std::invalid_argument);
  EXPECT_THROW(parse_sign_string("+  -"), std::invalid_argument);
  EXPECT_THROW(parse_sign_string("1 0"), std::invalid_argument);
}

TEST(SignString, RoundTripsRandomRows) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const auto row = fixtures::random_row(rng, 1 + i % 40);
    EXPECT_EQ(parse_sign_string(to_sign_string(row)), row);
    EXPECT_EQ(parse_sign_string(to_sign_string(row, true)), row);
  }
}

TEST(Row, RejectsInvalidCoefficients) {
  EXPECT_THROW(CirculantRow(std::vector<std::int8_t>{}), std::invalid_argument);
  EXPECT_THROW(CirculantRow(std::vector<std::int8_t>{0, 2}), std::invalid_argument);
}

TEST(Verify, KnownWeighingRows) {
  EXPECT_EQ(verify_cw(parse_sign_string(fixtures::cw_7_4)), 4);
  EXPECT_EQ(verify_cw(parse_sign_string(fixtures::cw_31_16)), 16);
  EXPECT_EQ(verify_cw(fixtures::cw_13_9.row()), 9);
  EXPECT_EQ(verify_cw(CirculantRow::identity(5)), 1);
  EXPECT_EQ(verify_cw(parse_sign_string("++")), std::nullopt);
}

TEST(Verify, AgreesWithDenseGramMatrix) {
  std::mt19937_64 rng(5);
  int positives = 0;
  for (int i = 0; i < 2000; ++i) {
    const auto n = 1 + static_cast<std::int64_t>(rng() % 12);
    const auto row = fixtures::random_row(rng, n);
    const auto dense = fixtures::dense_gram_weight(row);
    const auto fast = verify_cw(row);
    if (dense < 0) {
      EXPECT_FALSE(fast.has_value()) << to_sign_string(row);
    } else {
      ASSERT_TRUE(fast.has_value()) << to_sign_string(row);
      EXPECT_EQ(*fast, dense);
      ++positives;
    }
  }
  EXPECT_GT(positives, 0);
}

TEST(Verify, ExhaustiveSmallOrders) {
  for (std::int64_t n = 1; n <= 7; ++n) {
    std::int64_t total = 1;
    for (std::int64_t i = 0; i < n; ++i) total *= 3;
    for (std::int64_t code = 0; code < total; ++code) {
      std::vector<std::int8_t> c(static_cast<std::size_t>(n));
      auto x = code;
      for (auto& v : c) {
        v = static_cast<std::int8_t>(x % 3 - 1);
        x /= 3;
      }
      const CirculantRow row(c);
      const auto dense = fixtures::dense_gram_weight(row);
      const auto fast = verify_cw(row);
      EXPECT_EQ(fast.has_value(), dense >= 0);
      if (fast) EXPECT_EQ(*fast, dense);
    }
  }
}

TEST(Autocorrelation, SymmetricInLag) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto n = 2 + static_cast<std::int64_t>(rng() % 30);
    const auto row = fixtures::random_row(rng, n);
    for (Residue lag = 1; lag < n; ++lag)
      EXPECT_EQ(periodic_autocorrelation(row, lag), periodic_autocorrelation(row, n - lag));
    EXPECT_EQ(periodic_autocorrelation(row, 0), row.count(1) + row.count(-1));
  }
  EXPECT_THROW(periodic_autocorrelation(CirculantRow::zero(3), 3), std::invalid_argument);
}

TEST(DescribingSets, RoundTrip) {
  const auto row = parse_sign_string(fixtures::cw_7_4);
  const auto sets = describing_sets(row);
  EXPECT_EQ(sets.positive, (std::vector<Residue>{1, 2, 4}));
  EXPECT_EQ(sets.negative, (std::vector<Residue>{0}));
  EXPECT_EQ(from_sets(7, sets.positive, sets.negative), row);

  const std::vector<Residue> p{1, 2}, overlap{2}, outside{7};
  EXPECT_THROW(from_sets(7, p, overlap), std::invalid_argument);
  EXPECT_THROW(from_sets(7, p, outside), std::invalid_argument);
}

TEST(DescribingSets, Order31RowSizes) {
  const auto row = parse_sign_string(fixtures::cw_31_16);
  const auto sets = describing_sets(row);
  EXPECT_EQ(sets.positive.size(), 10u);
  EXPECT_EQ(sets.negative.size(), 6u);
}

TEST(NormalizeSign, PicksLargerPositiveSet) {
  const auto row = parse_sign_string(fixtures::cw_7_4);
  EXPECT_EQ(normalize_sign(row), row);
  EXPECT_EQ(normalize_sign(row.negated()), row);
  EXPECT_THROW(normalize_sign(parse_sign_string("+-0")), std::invalid_argument);
}

TEST(Transform, ActsOnIndices) {
  const auto row = CirculantRow::identity(7);
  const auto moved = apply_transform(row, {3, 2});
  EXPECT_EQ(moved[3], 1);
  const auto w = parse_sign_string("-+0000");
  const auto t = apply_transform(w, {1, 5});
  EXPECT_EQ(t[1], -1);
  EXPECT_EQ(t[0], 1);  // 5 * 1 + 1 = 6 = 0 mod 6
  EXPECT_THROW(apply_transform(row, {0, 7}), std::invalid_argument);
}

TEST(Transform, ComposeAndInverseProperties) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    const auto n = 1 + static_cast<std::int64_t>(rng() % 40);
    const auto row = fixtures::random_row(rng, n);
    const EquivalenceWitness a{static_cast<Residue>(rng() % n), fixtures::random_unit(rng, n)};
    const EquivalenceWitness b{static_cast<Residue>(rng() % n), fixtures::random_unit(rng, n)};
    EXPECT_EQ(apply_transform(apply_transform(row, a), b), apply_transform(row, compose(n, a, b)));
    EXPECT_EQ(apply_transform(apply_transform(row, a), inverse(n, a)), row);
    EXPECT_EQ(verify_cw(apply_transform(row, a)), verify_cw(row));
  }
}

TEST(Multipliers, Order31RowHasTwo) {
  const auto row = parse_sign_string(fixtures::cw_31_16);
  const auto m = multipliers(row);
  bool has_two = false;
  for (auto [t, s] : m)
    if (t == 2) has_two = true;
  EXPECT_TRUE(has_two);
  EXPECT_EQ(m.front(), (std::pair<Residue, Residue>{1, 0}));
}

TEST(Multipliers, ThirteenNineFixedByThree) {
  const auto row = fixtures::cw_13_9.row();
  EXPECT_EQ(multiplier_shift(row, 3), 0);
  EXPECT_EQ(multiplier_shift(row, 1), 0);
}

TEST(Multipliers, ShiftIsLeastAndCorrect) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    const auto n = 1 + static_cast<std::int64_t>(rng() % 25);
    const auto row = fixtures::random_row(rng, n);
    for (auto [t, s] : multipliers(row)) {
      EXPECT_EQ(apply_transform(row, {s, t}), row);
      for (Residue s2 = 0; s2 < s; ++s2) EXPECT_NE(apply_transform(row, {s2, t}), row);
    }
  }
}

TEST(Equivalence, FindsRandomTransforms) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 300; ++i) {
    const auto n = 1 + static_cast<std::int64_t>(rng() % 35);
    auto row = fixtures::random_row(rng, n);
    const EquivalenceWitness w{static_cast<Residue>(rng() % n), fixtures::random_unit(rng, n)};
    const auto image = apply_transform(row, w);
    const auto found = are_equivalent(row, image);
    ASSERT_TRUE(found.has_value());
    EXPECT_EQ(apply_transform(row, *found), image);
    EXPECT_LE(*found, w);
    EXPECT_EQ(canonical_form(row), canonical_form(image));
  }
}

TEST(Equivalence, OrderMismatchThrows) {
  EXPECT_THROW(are_equivalent(CirculantRow::zero(3), CirculantRow::zero(4)), std::invalid_argument);
}

TEST(Equivalence, NotEquivalentToNegation) {
  const auto row = parse_sign_string(fixtures::cw_7_4);
  EXPECT_FALSE(are_equivalent(row, row.negated()).has_value());
  EXPECT_NE(canonical_form(row), canonical_form(row.negated()));
  EXPECT_EQ(canonical_form(row, true), canonical_form(row.negated(), true));
}

TEST(CanonicalForm, IsLeastImage) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    const auto n = 1 + static_cast<std::int64_t>(rng() % 14);
    const auto row = fixtures::random_row(rng, n);
    const auto canon = canonical_form(row);
    CirculantRow least = row;
    for (Residue s = 0; s < n; ++s)
      for (auto t : units(n)) least = std::min(least, apply_transform(row, {s, t}));
    EXPECT_EQ(canon, least);
  }
}
