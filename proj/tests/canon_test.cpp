#include "oa/canon.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oa/construct.hpp"
#include "oa/error.hpp"
#include "test_support.hpp"

namespace oa {
namespace {

using Entries = std::vector<std::int64_t>;

JStar star(int m, Entries e) { return JStar{m, std::move(e)}; }

TEST(InducedSigns, DefiningWordHolds) {
  for (int m = 2; m <= 7; ++m) {
    for (SubsetMask neg = 0; neg < (SubsetMask{1} << m); ++neg) {
      std::vector<int> delta(static_cast<std::size_t>(m));
      for (int i = 0; i < m; ++i) delta[static_cast<std::size_t>(i)] = (neg >> i) & 1U ? -1 : 1;
      const auto s = induced_signs(delta);
      // Direct definition: product of delta over t_j.
      for (int j = 1; j <= m + 1; ++j) {
        ASSERT_EQ(s.induced[static_cast<std::size_t>(j - 1)],
                  hadamard_entry(neg, short_slot_subset(j, m)));
      }
      int word = 1;
      const int len = m % 2 == 0 ? m + 1 : m;
      for (int j = 0; j < len; ++j) word *= s.induced[static_cast<std::size_t>(j)];
      ASSERT_EQ(word, 1);
    }
  }
}

TEST(ShortJ, Oa12CanonicalBuild) {
  const auto d = build(star(4, {-4, -4, -4, -4, 4}), ArrayParams::make(2, 3));
  EXPECT_EQ(short_j(d, 2), (JShort{4, {-4, -4, -4, -4, 4}}));
}

TEST(ShortJ, SignSwitchFlipsSlotsContainingColumn) {
  const auto d = build(star(4, {-4, -4, -4, -4, 4}), ArrayParams::make(2, 3));
  const std::vector<int> delta{-1, 1, 1, 1};
  const auto switched = short_j(d.switch_signs(delta), 2);
  // Column 1 lies in t_1, t_2, t_3 and t_5 but not in t_4 = Z \ {1}.
  EXPECT_EQ(switched.entries, (Entries{4, 4, 4, -4, -4}));
  EXPECT_EQ(canonicalize(switched), star(4, {-4, -4, -4, -4, 4}));
}

TEST(ShortJ, FullFactorialCopiesVanish) {
  EXPECT_EQ(short_j(testing::full_factorial(4, 3), 2).entries, Entries(5, 0));
}

TEST(ShortJ, ShapeErrors) {
  EXPECT_THROW(short_j(testing::full_factorial(4), 3), ShapeError);
  const Design weak(std::vector<std::vector<int>>(8, {1, 1, 1, 1}));
  EXPECT_THROW(short_j(weak, 2), ShapeError);
}

TEST(SolveSigns, EvenMFreeLast) {
  const auto s = solve_signs({-1, 1, -1, 1, 0}, 4);
  EXPECT_EQ(s.induced, (std::vector<int>{-1, 1, -1, 1, 1}));
}

TEST(SolveSigns, EvenMIdentity) {
  const auto s = solve_signs({1, 1, 1, 1, 0}, 4);
  EXPECT_EQ(s.delta, (std::vector<int>{1, 1, 1, 1}));
  EXPECT_EQ(s.induced[4], 1);
}

TEST(SolveSigns, OddMFreeInterior) {
  // m = 5, slot 5 (zero-based 4) free: forced so that slots 1..5 multiply to 1.
  const std::vector<int> targets{-1, 1, -1, -1, 0, 1};
  const auto s = solve_signs(targets, 4);
  for (int j : {0, 1, 2, 3, 5}) EXPECT_EQ(s.induced[static_cast<std::size_t>(j)], targets[static_cast<std::size_t>(j)]);
  EXPECT_EQ(s.induced[4], -1);
}

TEST(SolveSigns, ExhaustiveAgainstSearch) {
  for (int m = 2; m <= 6; ++m) {
    for (int free_slot = 0; free_slot <= m; ++free_slot) {
      if (m % 2 == 1 && free_slot == m) continue;
      for (SubsetMask bits = 0; bits < (SubsetMask{1} << (m + 1)); ++bits) {
        std::vector<int> targets(static_cast<std::size_t>(m) + 1);
        for (int j = 0; j <= m; ++j) targets[static_cast<std::size_t>(j)] = (bits >> j) & 1U ? -1 : 1;
        const auto s = solve_signs(targets, free_slot);
        ASSERT_EQ(induced_signs(s.delta).induced, s.induced);
        for (int j = 0; j <= m; ++j) {
          if (j != free_slot) ASSERT_EQ(s.induced[static_cast<std::size_t>(j)], targets[static_cast<std::size_t>(j)]);
        }
      }
    }
  }
}

TEST(SolveSigns, OddMCannotDropLast) {
  EXPECT_THROW(solve_signs({1, 1, 1, 1, 1, 0}, 5), UnsupportedDropError);
}

TEST(Canonicalize, Examples) {
  EXPECT_EQ(canonicalize(JShort{4, {4, -4, 4, -4, 4}}), star(4, {-4, -4, -4, -4, 4}));
  EXPECT_EQ(canonicalize(JShort{4, {-4, -4, -4, -4, 4}}), star(4, {-4, -4, -4, -4, 4}));
  const Entries odd{-8, -8, -8, -8, 8, 0};
  EXPECT_EQ(canonicalize(JShort{5, odd}), star(5, odd));
}

TEST(Canonicalize, SecondPatternMovesSmallestToSlotM) {
  // |J_{t_5}| = 12 exceeds min |J_{t_j}| = 4 at j = 2.
  const auto out = canonicalize(JShort{4, {-12, 4, -8, 8, 12}});
  EXPECT_TRUE(is_canonical(out.as_short()));
  EXPECT_EQ(out.entries[3], out.entries[3] < 0 ? -4 : 4);
  EXPECT_LT(out.entries[4], 0);
}

TEST(Canonicalize, IdempotentCanonicalAndOrbitInvariant) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> val(-3, 3);
  for (int m = 3; m <= 7; ++m) {
    for (int rep = 0; rep < 300; ++rep) {
      JShort x{m, Entries(static_cast<std::size_t>(m) + 1)};
      for (auto& e : x.entries) e = 4 * val(rng);
      const auto c = canonicalize(x);
      ASSERT_TRUE(is_canonical(c.as_short()));
      ASSERT_EQ(canonicalize(c), c);

      // Random element of the column permutation / sign switch group.
      const auto perm = testing::random_permutation(m, rng);
      const auto signs = induced_signs(testing::random_signs(m, rng));
      JShort y{m, Entries(x.entries.size())};
      for (int j = 0; j < m; ++j) {
        y.entries[static_cast<std::size_t>(j)] =
            signs.induced[static_cast<std::size_t>(j)] * x.entries[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])];
      }
      y.entries[static_cast<std::size_t>(m)] = signs.induced[static_cast<std::size_t>(m)] * x.entries[static_cast<std::size_t>(m)];
      ASSERT_EQ(canonicalize(y), c);
    }
  }
}

TEST(Canonicalize, TiedMinimaAndZerosDoNotMatter) {
  // Two tied minima (|4|) and zeros; every slot permutation gives one answer.
  for (const Entries& base : {Entries{4, -4, 8, -12, 12}, Entries{0, 0, -4, 8, 4},
                              Entries{0, 4, 0, -8, 0}}) {
    Entries head(base.begin(), base.end() - 1);
    std::sort(head.begin(), head.end());
    const auto expected = canonicalize(JShort{4, base});
    do {
      Entries e = head;
      e.push_back(base.back());
      ASSERT_EQ(canonicalize(JShort{4, e}), expected);
    } while (std::next_permutation(head.begin(), head.end()));
  }
}

TEST(Isomorphic, RowAndColumnMoves) {
  std::mt19937_64 rng(5);
  const auto a = build(star(4, {-4, -4, -4, -4, -4}), ArrayParams::make(2, 5));
  EXPECT_TRUE(isomorphic(a, a.permute_rows(testing::random_permutation(a.runs(), rng)), 2));
  for (int rep = 0; rep < 20; ++rep) EXPECT_TRUE(isomorphic(a, testing::random_isomorph(a, rng), 2));
}

TEST(Isomorphic, SameCfvPairDiffers) {
  // Two OA(40,4,2,2) with equal confounding frequency vectors: tuples
  // (-1,-1,-1,-1,-1;0) and (-1,-1,-1,-1,1;1) scaled by 2^{d+1} = 8.
  const auto p = ArrayParams::make(2, 10);
  const auto a = build(star(4, {-8, -8, -8, -8, -8}), p);
  const auto b = build(star(4, {-8, -8, -8, -8, 8}), p);
  EXPECT_FALSE(isomorphic(a, b, 2));
}

TEST(Isomorphic, ShapeMismatch) {
  const auto a = build(star(4, {-4, -4, -4, -4, 4}), ArrayParams::make(2, 3));
  EXPECT_THROW(isomorphic(a, testing::full_factorial(4), 2), ShapeError);
}

}  // namespace
}  // namespace oa
