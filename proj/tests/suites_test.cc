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

#include "amplikit/suites.h"

#include <gtest/gtest.h>

namespace amplikit {
namespace {

int64_t ExpectPass(const SuiteResult& r) {
  EXPECT_TRUE(r.passed) << r.counterexample;
  EXPECT_TRUE(r.counterexample.empty());
  return r.checked;
}

TEST(SuitesTest, SmallTypesPass) {
  int64_t checked = 0;
  for (int n = 1; n <= 5; ++n) {
    for (int k = 0; k < n; ++k) {
      SCOPED_TRACE(std::to_string(n) + "," + std::to_string(k));
      checked += ExpectPass(VerifyBijections(n, k));
      checked += ExpectPass(VerifyTriangulation(n, k));
      checked += ExpectPass(VerifyAdjacency(n, k, n <= 5));
      checked += ExpectPass(VerifyBoundary(n, k, n <= 5));
      checked += ExpectPass(VerifyGantmakherKrein(n, k, ItemSeed(1, n, k), 5));
      checked += ExpectPass(VerifyFVector(n, k));
    }
  }
  EXPECT_GT(checked, 1000);
}

TEST(SuitesTest, ImagesOfSmallTypes) {
  for (int n = 1; n <= 4; ++n) {
    for (int k = 0; k < n; ++k) {
      EXPECT_GT(ExpectPass(VerifyImages(n, k, ItemSeed(2, n, k), 5, 3)), 0);
    }
  }
}

TEST(SuitesTest, FVectorDetail) {
  EXPECT_EQ(VerifyFVector(5, 3).detail, "4q³+15q²+20q+10");
  EXPECT_EQ(VerifyFVector(4, 2).detail, "3q²+8q+6");
}

TEST(SuitesTest, ItemSeedsAreDistinct) {
  EXPECT_NE(ItemSeed(1, 5, 2), ItemSeed(1, 5, 3));
  EXPECT_NE(ItemSeed(1, 5, 2), ItemSeed(2, 5, 2));
  EXPECT_EQ(ItemSeed(7, 6, 1), ItemSeed(7, 6, 1));
}

TEST(SuitesTest, FailRecordsFirstCounterexample) {
  SuiteResult r;
  r.Fail("first");
  r.Fail("second");
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.counterexample, "first");
}

}  // namespace
}  // namespace amplikit
