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

#include "amplikit/diagram_families.h"

#include <gtest/gtest.h>

#include <set>

#include "amplikit/amplituhedron.h"
#include "amplikit/errors.h"
#include "oracles.h"

namespace amplikit {
namespace {

using Rows = std::vector<std::string>;

std::set<LeDiagram> AsSet(const std::vector<LeDiagram>& v) {
  return std::set<LeDiagram>(v.begin(), v.end());
}

TEST(DiagramFamiliesTest, BcfwCountsForFour) {
  std::vector<size_t> counts;
  for (int k = 0; k < 4; ++k) counts.push_back(BcfwCells(4, k).size());
  EXPECT_EQ(counts, (std::vector<size_t>{1, 3, 3, 1}));
}

TEST(DiagramFamiliesTest, BcfwCountIsBinomial) {
  for (int n = 1; n <= 9; ++n) {
    for (int k = 0; k < n; ++k) {
      ASSERT_EQ(static_cast<int64_t>(BcfwCells(n, k).size()),
                oracle::Choose(n - 1, k));
    }
  }
}

TEST(DiagramFamiliesTest, TwoFourFamilies) {
  const std::set<LeDiagram> d{LeDiagram(2, 4, {"0+", "0+"}),
                              LeDiagram(2, 4, {"0+", "+"}),
                              LeDiagram(2, 4, {"+", "+"})};
  EXPECT_EQ(AsSet(EnumerateFamily(4, 2, DiagramFamily::kD)), d);
  EXPECT_EQ(AsSet(BcfwCells(4, 2)), d);
  std::set<LeDiagram> l = d;
  l.insert(LeDiagram(2, 4, {"+0", "+0"}));
  l.insert(LeDiagram(2, 4, {"+0", "+"}));
  EXPECT_EQ(AsSet(EnumerateFamily(4, 2, DiagramFamily::kL)), l);
}

TEST(DiagramFamiliesTest, BcfwPermutationsAreIntervalCycles) {
  for (int n = 1; n <= 7; ++n) {
    for (int k = 0; k < n; ++k) {
      for (const LeDiagram& d : BcfwCells(n, k)) {
        const DecoratedPermutation pi = LeToPermutation(d);
        ASSERT_TRUE(pi.white_fixed().empty()) << d.ToString();
        // Each cycle is (b, b-1, ..., a) on a run of consecutive labels.
        std::vector<int> ends;
        for (int i = 1; i <= n; ++i) {
          if (i == n || pi(i + 1) != i) ends.push_back(i);
        }
        ASSERT_EQ(IntervalCyclePermutation(n, ends), pi) << d.ToString();
      }
    }
  }
}

TEST(DiagramFamiliesTest, FamilyMembershipByDefinition) {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k < n; ++k) {
      std::set<LeDiagram> d, dbar;
      for (const LeDiagram& x : AllLeDiagrams(k, n)) {
        bool one = true, at_most_one = true;
        for (int r = 1; r <= k; ++r) {
          const std::string& row = x.rows()[r - 1];
          const size_t pluses = std::count(row.begin(), row.end(), '+');
          const bool at_end = pluses == 0 || row.back() == '+';
          at_most_one = at_most_one && pluses <= 1 && at_end;
          one = one && pluses == 1 && at_end;
        }
        if (one) d.insert(x);
        if (at_most_one) dbar.insert(x);
      }
      ASSERT_EQ(AsSet(EnumerateFamily(n, k, DiagramFamily::kD)), d);
      ASSERT_EQ(AsSet(EnumerateFamily(n, k, DiagramFamily::kDBar)), dbar);
      ASSERT_EQ(dbar.size(), EnumerateSignSet(n, k, true).size());
    }
  }
}

// Inserts all-zero columns into closed diagrams of smaller type by adding
// horizontal steps anywhere in the border word.
std::set<LeDiagram> InsertZeroColumns(int n, int k) {
  std::set<LeDiagram> out;
  for (int small = k + 1; small <= n; ++small) {
    for (const LeDiagram& d : EnumerateFamily(small, k, DiagramFamily::kDBar)) {
      // Word entries: row index (1..k) for vertical steps, -c for column c.
      std::vector<int> word;
      for (int label = 1; label <= small; ++label) {
        word.push_back(d.RowOfLabel(label) ? d.RowOfLabel(label)
                                           : -d.ColumnOfLabel(label));
      }
      const int extra = n - small;
      // Choose positions of the inserted steps among n slots.
      for (long mask = 0; mask < (1L << n); ++mask) {
        if (__builtin_popcountl(mask) != extra) continue;
        std::vector<int> full;
        size_t next = 0;
        for (int slot = 0; slot < n; ++slot) {
          full.push_back((mask >> slot) & 1 ? 0 : word[next++]);
        }
        Rows rows(k);
        for (int slot = 0; slot < n; ++slot) {
          if (full[slot] > 0) {
            // Columns to the left of this row's border are the horizontal
            // steps that come later in the word, leftmost first.
            std::string fill;
            for (int later = n - 1; later > slot; --later) {
              if (full[later] > 0) continue;
              fill += full[later] == 0
                          ? '0'
                          : d.rows()[full[slot] - 1][-full[later] - 1];
            }
            rows[full[slot] - 1] = fill;
          }
        }
        out.insert(LeDiagram(k, n, rows));
      }
    }
  }
  return out;
}

TEST(DiagramFamiliesTest, ClosedLIsClosedDWithZeroColumns) {
  for (int n = 2; n <= 6; ++n) {
    for (int k = 0; k < n; ++k) {
      ASSERT_EQ(AsSet(EnumerateFamily(n, k, DiagramFamily::kLBar)),
                InsertZeroColumns(n, k))
          << n << "," << k;
    }
  }
}

TEST(DiagramFamiliesTest, SlideOfWorkedExample) {
  const LeDiagram d(5, 9, {"0+00", "000", "0+0", "0+0", "+"});
  ASSERT_TRUE(InFamily(d, DiagramFamily::kLBar));
  const std::set<LeDiagram> expected{
      LeDiagram(5, 9, {"00+", "000", "00+", "0+", "+"}),
      LeDiagram(5, 9, {"00+", "000", "00+", "00+", "+"}),
      LeDiagram(5, 9, {"00+", "000", "00+", "00", "+"}),
      LeDiagram(5, 9, {"000+", "000", "00+", "0+", "+"}),
      LeDiagram(5, 9, {"000", "000", "00+", "0+", "+"}),
      LeDiagram(5, 9, {"000+", "000", "00+", "00+", "+"}),
      LeDiagram(5, 9, {"000+", "000", "00+", "00", "+"}),
      LeDiagram(5, 9, {"000", "000", "00+", "00+", "+"}),
      LeDiagram(5, 9, {"000", "000", "00+", "00", "+"})};
  EXPECT_EQ(AsSet(Slide(d)), expected);
}

TEST(DiagramFamiliesTest, SlideFixesClosedDiagrams) {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k < n; ++k) {
      for (const LeDiagram& d : EnumerateFamily(n, k, DiagramFamily::kDBar)) {
        ASSERT_EQ(Slide(d), std::vector<LeDiagram>{d}) << d.ToString();
      }
    }
  }
}

TEST(DiagramFamiliesTest, SlideOfSingleRow) {
  const LeDiagram d(1, 4, {"+00"});
  const std::set<LeDiagram> expected{
      LeDiagram(1, 4, {"+"}), LeDiagram(1, 4, {"0+"}), LeDiagram(1, 4, {"00+"}),
      LeDiagram(1, 4, {"0"}), LeDiagram(1, 4, {"00"})};
  EXPECT_EQ(AsSet(Slide(d)), expected);
  std::set<std::string> signs;
  for (const LeDiagram& x : expected) signs.insert(OmegaDS(x).ToString());
  EXPECT_EQ(signs,
            (std::set<std::string>{"+++-", "++--", "+---", "++0-", "+0--"}));
}

TEST(DiagramFamiliesTest, SlideRejectsDiagramsOutsideClosedL) {
  EXPECT_THROW(Slide(LeDiagram(1, 3, {"++"})), InvalidArgument);
}

TEST(DiagramFamiliesTest, CoversMatchSignVectorCovers) {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k < n; ++k) {
      const std::vector<LeDiagram> closed =
          EnumerateFamily(n, k, DiagramFamily::kDBar);
      std::vector<SignVector> sigma;
      for (const LeDiagram& d : closed) sigma.push_back(OmegaDS(d));
      for (size_t i = 0; i < closed.size(); ++i) {
        std::set<LeDiagram> expected;
        for (size_t j = 0; j < closed.size(); ++j) {
          if (j == i || !SignLeq(sigma[j], sigma[i])) continue;
          bool between = false;
          for (size_t m = 0; m < closed.size() && !between; ++m) {
            between = m != i && m != j && SignLeq(sigma[j], sigma[m]) &&
                      SignLeq(sigma[m], sigma[i]);
          }
          if (!between) expected.insert(closed[j]);
        }
        ASSERT_EQ(AsSet(CoverRelations(closed[i])), expected)
            << closed[i].ToString();
      }
    }
  }
}

TEST(DiagramFamiliesTest, EmptyDiagramHasNoCovers) {
  EXPECT_TRUE(CoverRelations(LeDiagram::Zero(2, 4, {})).empty());
}

TEST(DiagramFamiliesTest, ClosedTwoFourPoset) {
  // Bounded complex of four generic lines: 3 regions, 8 edges, 6 points.
  std::vector<int> by_pluses(3, 0);
  for (const LeDiagram& d : EnumerateFamily(4, 2, DiagramFamily::kDBar)) {
    ++by_pluses[d.NumPluses()];
  }
  EXPECT_EQ(by_pluses, (std::vector<int>{6, 8, 3}));
}

}  // namespace
}  // namespace amplikit
