#include "oa/subsets.hpp"

#include <gtest/gtest.h>

#include "oa/error.hpp"

namespace oa {
namespace {

TEST(RunRow, EmptySubsetIsAllPlus) {
  EXPECT_EQ(run_row(0, 4), (std::vector<int>{1, 1, 1, 1}));
}

TEST(RunRow, MarksMembersNegative) {
  EXPECT_EQ(run_row(0b001, 3), (std::vector<int>{-1, 1, 1}));
  EXPECT_EQ(run_row(0b111, 3), (std::vector<int>{-1, -1, -1}));
}

TEST(RunRow, RejectsUnsupportedWidth) {
  EXPECT_THROW(run_row(0, 1), ParameterError);
  EXPECT_THROW(run_row(0, 31), ParameterError);
  EXPECT_THROW(run_row(0b1000, 3), ParameterError);
}

TEST(HadamardEntry, Examples) {
  for (SubsetMask t = 0; t < 16; ++t) EXPECT_EQ(hadamard_entry(0, t), 1);
  EXPECT_EQ(hadamard_entry(0b1, 0b1), -1);
  EXPECT_EQ(hadamard_entry(0b011, 0b110), -1);
}

TEST(HadamardEntry, SymmetricAndOrthogonal) {
  for (int m = 1; m <= 8; ++m) {
    const SubsetMask size = SubsetMask{1} << m;
    for (SubsetMask t = 0; t < size; ++t) {
      for (SubsetMask u = t; u < size; ++u) {
        ASSERT_EQ(hadamard_entry(t, u), hadamard_entry(u, t));
        long long dot = 0;
        for (SubsetMask s = 0; s < size; ++s) dot += hadamard_entry(s, t) * hadamard_entry(s, u);
        ASSERT_EQ(dot, t == u ? static_cast<long long>(size) : 0) << "m=" << m;
      }
    }
  }
}

TEST(HadamardEntry, SingletonColumnIsRunRow) {
  const int m = 6;
  for (SubsetMask s = 0; s < (SubsetMask{1} << m); ++s) {
    const auto row = run_row(s, m);
    for (int j = 1; j <= m; ++j) {
      ASSERT_EQ(hadamard_entry(s, SubsetMask{1} << (j - 1)), row[static_cast<std::size_t>(j - 1)]);
    }
  }
}

TEST(ShortSlots, LeaveOneOutThenFullSet) {
  // m = 4: t_1 = Z\{4}, t_2 = Z\{3}, t_3 = Z\{2}, t_4 = Z\{1}, t_5 = Z.
  EXPECT_EQ(short_slot_subset(1, 4), 0b0111u);
  EXPECT_EQ(short_slot_subset(2, 4), 0b1011u);
  EXPECT_EQ(short_slot_subset(3, 4), 0b1101u);
  EXPECT_EQ(short_slot_subset(4, 4), 0b1110u);
  EXPECT_EQ(short_slot_subset(5, 4), 0b1111u);
}

TEST(ArrayParams, DerivedFields) {
  const auto p = ArrayParams::make(2, 3);
  EXPECT_EQ(p.m, 4);
  EXPECT_EQ(p.n, 12);
  EXPECT_EQ(p.parity(), ParityCase::kEvenDOddLambda);
  EXPECT_EQ(ArrayParams::make(2, 6).lambda_star(), 3);
  EXPECT_EQ(ArrayParams::make(2, 6).parity(), ParityCase::kEvenDEvenLambda);
  EXPECT_EQ(ArrayParams::make(3, 5).parity(), ParityCase::kOddDOddLambda);
  EXPECT_EQ(ArrayParams::make(3, 4).parity(), ParityCase::kOddDEvenLambda);
}

TEST(ArrayParams, FromRuns) {
  EXPECT_EQ(ArrayParams::from_runs(52, 4), ArrayParams::make(2, 13));
  EXPECT_THROW(ArrayParams::from_runs(50, 4), ParameterError);
  EXPECT_THROW(ArrayParams::from_runs(12, 3), ParameterError);
}

TEST(ArrayParams, RejectsOutOfRange) {
  EXPECT_THROW(ArrayParams::make(1, 3), ParameterError);
  EXPECT_THROW(ArrayParams::make(2, 0), ParameterError);
  EXPECT_THROW(ArrayParams::make(29, 1), ParameterError);
  EXPECT_NO_THROW(ArrayParams::make(28, 1));
}

}  // namespace
}  // namespace oa
