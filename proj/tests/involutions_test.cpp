#include "cicy/errors.hpp"
#include "cicy/involutions.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

namespace cicy {
namespace {

using testing::bicubic;
using testing::configex1;
using testing::quintic;
using testing::tetraquadric;

// Row indices are 0-based: the worked example's CP1 rows are 0, 1, 2 and the
// CP3 row is 4.
const CCombination kSwap12{{{1, 2}}};

TEST(CCombinations, WorkedExample) {
  const auto combos = enumerate_c_combinations(configex1());
  ASSERT_EQ(combos.size(), 2u);
  EXPECT_TRUE(combos[0].pairs.empty());
  EXPECT_EQ(combos[1], kSwap12);
}

TEST(CCombinations, Quintic) {
  const auto combos = enumerate_c_combinations(quintic());
  ASSERT_EQ(combos.size(), 1u);
  EXPECT_TRUE(combos[0].pairs.empty());
}

// Four identical rows: the empty set, all six single pairs, and the three
// perfect matchings.
TEST(CCombinations, TetraquadricHasAllMatchings) {
  const std::vector<CCombination> expected{
      {},
      {{{0, 1}}},
      {{{0, 1}, {2, 3}}},
      {{{0, 2}}},
      {{{0, 2}, {1, 3}}},
      {{{0, 3}}},
      {{{0, 3}, {1, 2}}},
      {{{1, 2}}},
      {{{1, 3}}},
      {{{2, 3}}},
  };
  EXPECT_EQ(enumerate_c_combinations(tetraquadric()), expected);
}

TEST(CCombinations, AgreesWithBruteForce) {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const auto cfg = testing::random_valid_config(rng, 6, 7, 4);
    const auto got = enumerate_c_combinations(cfg);
    std::vector<std::vector<RowPair>> pairs;
    for (const auto& c : got) pairs.push_back(c.pairs);
    EXPECT_EQ(pairs, testing::oracle_c_combinations(cfg));
    ASSERT_FALSE(got.empty());
    EXPECT_TRUE(got.front().pairs.empty());
  }
}

TEST(BAdmissible, WorkedExampleAcceptsFirstCP1) { EXPECT_TRUE(b_admissible(configex1(), kSwap12, {0})); }

TEST(BAdmissible, WorkedExampleRejectsCP3) { EXPECT_FALSE(b_admissible(configex1(), kSwap12, {4})); }

TEST(BAdmissible, WorkedExampleRejectsBoth) { EXPECT_FALSE(b_admissible(configex1(), kSwap12, {0, 4})); }

TEST(BAdmissible, Tetraquadric) { EXPECT_TRUE(b_admissible(tetraquadric(), {}, {2})); }

TEST(BAdmissible, EvenClassSizeEscapesOddDegree) {
  // Two identical columns of degree 1 on the B row: r = 2, Q = 2.
  const ConfigurationMatrix cfg({1, 3}, {{1, 1}, {2, 2}});
  EXPECT_TRUE(b_admissible(cfg, {}, {0}));
  EXPECT_TRUE(b_admissible(cfg, {}, {1}));
  // Three identical degree-1 columns: r = 3, Q = 3.
  const ConfigurationMatrix odd({2, 3}, {{1, 1, 1, 0}, {1, 1, 1, 1}});
  EXPECT_FALSE(b_admissible(odd, {}, {1}));
}

TEST(BAdmissible, Preconditions) {
  EXPECT_THROW(b_admissible(configex1(), kSwap12, {3}), PreconditionError);  // CP2
  EXPECT_THROW(b_admissible(configex1(), kSwap12, {1}), PreconditionError);  // C row
  EXPECT_THROW(b_admissible(configex1(), kSwap12, {9}), PreconditionError);
}

TEST(BCombinations, WorkedExample) {
  const auto bs = enumerate_b_combinations(configex1(), kSwap12);
  ASSERT_EQ(bs.size(), 1u);
  EXPECT_EQ(bs[0].rows, std::vector<int>{0});
}

TEST(BCombinations, BicubicHasNone) { EXPECT_TRUE(enumerate_b_combinations(bicubic(), {}).empty()); }

TEST(BCombinations, TetraquadricWithOneSwap) {
  const auto bs = enumerate_b_combinations(tetraquadric(), CCombination{{{0, 1}}});
  ASSERT_EQ(bs.size(), 3u);
  EXPECT_EQ(bs[0].rows, (std::vector<int>{2}));
  EXPECT_EQ(bs[1].rows, (std::vector<int>{2, 3}));
  EXPECT_EQ(bs[2].rows, (std::vector<int>{3}));
}

TEST(BCombinations, IdenticalOddRowsWithEvenEntriesAdmitEverything) {
  // [1,...,1 || 2] for m factors; only m = 4 is Calabi-Yau but the rule
  // does not depend on that.
  for (int m = 1; m <= 5; ++m) {
    std::vector<int> dims(static_cast<std::size_t>(m), 1);
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(m), std::vector<int>{2});
    const ConfigurationMatrix cfg(dims, rows);
    for (const auto& c : enumerate_c_combinations(cfg)) {
      const int free_rows = m - 2 * c.size();
      const auto bs = enumerate_b_combinations(cfg, c);
      EXPECT_EQ(bs.size(), (std::size_t{1} << free_rows) - 1);
    }
  }
}

TEST(BCombinations, AgreesWithParityOracle) {
  std::mt19937 rng(43);
  int rejected_singletons = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto cfg = testing::random_valid_config(rng, 6, 7, 4);
    for (const auto& c : enumerate_c_combinations(cfg)) {
      const auto got = enumerate_b_combinations(cfg, c);
      std::vector<std::vector<int>> rows;
      for (const auto& b : got) {
        EXPECT_TRUE(testing::oracle_parity_ok(cfg, b.rows));
        rows.push_back(b.rows);
      }
      EXPECT_EQ(rows, testing::oracle_b_combinations(cfg, c.pairs));
      for (int r = 0; r < cfg.rows(); ++r) {
        if (cfg.dim(r) % 2 == 0 || c.contains_row(r)) continue;
        const bool ours = b_admissible(cfg, c, {r});
        EXPECT_EQ(ours, testing::oracle_parity_ok(cfg, {r}));
        rejected_singletons += !ours;
      }
    }
  }
  EXPECT_GT(rejected_singletons, 0);
}

TEST(FreeAssignments, WorkedExample) {
  // Without a swap the two identical CP1 rows may carry B together: each of
  // their shared columns then has Q = 2.
  const auto free = enumerate_free_assignments(configex1());
  ASSERT_EQ(free.size(), 4u);
  EXPECT_TRUE(free[0].c.pairs.empty());
  EXPECT_EQ(free[0].b.rows, std::vector<int>{0});
  EXPECT_EQ(free[1].b.rows, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(free[2].b.rows, (std::vector<int>{1, 2}));
  EXPECT_EQ(free[3].c, kSwap12);
  EXPECT_EQ(free[3].b.rows, std::vector<int>{0});
  EXPECT_EQ(free[3].label(0), RowLabel::B);
  EXPECT_EQ(free[3].label(1), RowLabel::C);
  EXPECT_EQ(free[3].label(2), RowLabel::C);
  EXPECT_EQ(free[3].label(3), RowLabel::A);
  EXPECT_EQ(free[3].label(4), RowLabel::A);
}

TEST(BCombinations, WorkedExampleWithoutSwap) {
  const auto bs = enumerate_b_combinations(configex1(), {});
  ASSERT_EQ(bs.size(), 3u);
  EXPECT_FALSE(b_admissible(configex1(), {}, {1}));
  EXPECT_FALSE(b_admissible(configex1(), {}, {4}));
  EXPECT_FALSE(b_admissible(configex1(), {}, {0, 4}));
}

TEST(FreeAssignments, NoOddFactor) {
  EXPECT_TRUE(enumerate_free_assignments(quintic()).empty());
  EXPECT_TRUE(enumerate_free_assignments(bicubic()).empty());
}

TEST(FreeAssignments, Deterministic) {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    const auto cfg = testing::random_valid_config(rng, 6, 7, 4);
    EXPECT_EQ(enumerate_free_assignments(cfg), enumerate_free_assignments(cfg));
  }
}

}  // namespace
}  // namespace cicy
