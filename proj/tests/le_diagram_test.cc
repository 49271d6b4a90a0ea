// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "amplikit/le_diagram.h"

#include <gtest/gtest.h>

#include "amplikit/errors.h"
#include "oracles.h"

namespace amplikit {
namespace {

const LeDiagram kTenLabels(4, 10, {"0+0+0", "+++++", "000", "++"});

TEST(LeDiagramTest, BorderLabels) {
  // Rows of lengths 5,5,3,2 in a 4 x 6 box: the border goes left once, then
  // down twice, left twice, down, left, down, left twice.
  EXPECT_EQ(kTenLabels.VerticalSteps(), (std::vector<int>{2, 3, 6, 8}));
  EXPECT_EQ(kTenLabels.HorizontalSteps(), (std::vector<int>{1, 4, 5, 7, 9, 10}));
  EXPECT_EQ(kTenLabels.Shape(), (std::vector<int>{5, 5, 3, 2}));
  EXPECT_EQ(kTenLabels.NumPluses(), 9);
  EXPECT_EQ(kTenLabels.ToString(), "[0+0+0;+++++;000;++]");
}

TEST(LeDiagramTest, RejectsBadInput) {
  EXPECT_THROW(LeDiagram(2, 4, {"+", "++"}), InvalidArgument);    // Not a partition.
  EXPECT_THROW(LeDiagram(2, 4, {"+++", ""}), InvalidArgument);    // Too wide.
  EXPECT_THROW(LeDiagram(2, 4, {"++", "+0"}), InvalidArgument);   // Le property.
  EXPECT_THROW(LeDiagram(1, 3, {"+x"}), InvalidArgument);
}

TEST(LeDiagramTest, TenLabelPermutation) {
  EXPECT_EQ(LeToPermutation(kTenLabels).ToString(), "(1̲,5,4,9,7,6̄,2,10,3,8)");
}

TEST(LeDiagramTest, TenLabelDiagramIsTheOnlyFillingWithItsPermutation) {
  const DecoratedPermutation target = LeToPermutation(kTenLabels);
  int hits = 0;
  for (const auto& rows : oracle::LeFillings({5, 5, 3, 2})) {
    hits += LeToPermutation(LeDiagram(4, 10, rows)) == target;
  }
  EXPECT_EQ(hits, 1);
  EXPECT_EQ(PermutationToLe(target), kTenLabels);
}

TEST(LeDiagramTest, EnumerationMatchesBruteForce) {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) {
      std::vector<std::vector<int>> shapes;
      std::vector<int> prefix;
      oracle::Partitions(k, n - k, prefix, shapes);
      size_t count = 0;
      for (const auto& shape : shapes) count += oracle::LeFillings(shape).size();
      const std::vector<LeDiagram> all = AllLeDiagrams(k, n);
      ASSERT_EQ(all.size(), count) << n << "," << k;
      ASSERT_EQ(AllDecoratedPermutations(n, k).size(), count);
      ASSERT_TRUE(std::is_sorted(all.begin(), all.end()));
    }
  }
}

TEST(LeDiagramTest, PositroidCellCountsOfGrTwoFour) {
  EXPECT_EQ(AllLeDiagrams(2, 4).size(), 33u);
}

TEST(LeDiagramTest, PermutationsHaveKAntiExcedancesAndRoundTrip) {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (const LeDiagram& d : AllLeDiagrams(k, n)) {
        const DecoratedPermutation pi = LeToPermutation(d);
        ASSERT_EQ(static_cast<int>(pi.AntiExcedances().size()), k)
            << d.ToString();
        ASSERT_EQ(PermutationToLe(pi), d) << d.ToString();
      }
    }
  }
}

TEST(LeDiagramTest, AllZeroFullBoxFixesEverything) {
  // Every pipe crosses straight through, so each label is fixed; the fixed
  // points on vertical steps are white and they are the anti-excedances.
  for (int n = 2; n <= 6; ++n) {
    for (int k = 1; k < n; ++k) {
      const LeDiagram d = LeDiagram::Zero(k, n, std::vector<int>(k, n - k));
      const DecoratedPermutation pi = LeToPermutation(d);
      for (int i = 1; i <= n; ++i) ASSERT_TRUE(pi.IsFixed(i));
      EXPECT_EQ(pi.AntiExcedances(), d.VerticalSteps());
    }
  }
}

TEST(LeDiagramTest, SinglePlusIsATransposition) {
  const DecoratedPermutation pi = LeToPermutation(LeDiagram(1, 2, {"+"}));
  EXPECT_EQ(pi.images(), (std::vector<int>{2, 1}));
  EXPECT_EQ(pi.AntiExcedances(), (std::vector<int>{1}));
}

TEST(DecoratedPermutationTest, Validation) {
  EXPECT_THROW(DecoratedPermutation({1, 1}, {}), InvalidArgument);
  EXPECT_THROW(DecoratedPermutation({2, 1}, {1}), InvalidArgument);
  const DecoratedPermutation pi({1, 3, 2}, {1});
  EXPECT_TRUE(pi.IsWhite(1));
  EXPECT_EQ(pi.Inverse(3), 2);
  EXPECT_EQ(pi.ToString(), "(1̄,3,2)");
}

}  // namespace
}  // namespace amplikit
