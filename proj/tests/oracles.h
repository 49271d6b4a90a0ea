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

// Slow, obviously-correct reference implementations used only by tests.

#ifndef AMPLIKIT_TESTS_ORACLES_H_
#define AMPLIKIT_TESTS_ORACLES_H_

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "amplikit/exact_linear.h"
#include "amplikit/sign_vector.h"

namespace amplikit::oracle {

inline int VarOf(const std::vector<int>& v) {
  int prev = 0, changes = 0;
  bool any = false;
  for (int x : v) {
    if (x == 0) continue;
    if (any && x != prev) ++changes;
    prev = x;
    any = true;
  }
  return any ? changes : -1;
}

// Maximum sign variation over all 2^z fillings of the zeros.
inline int VarBarByFillings(const SignVector& s) {
  std::vector<int> zeros;
  for (int i = 1; i <= s.size(); ++i) {
    if (s[i] == 0) zeros.push_back(i);
  }
  int best = -1;
  for (int mask = 0; mask < (1 << zeros.size()); ++mask) {
    std::vector<int> v;
    for (int i = 1; i <= s.size(); ++i) v.push_back(s[i]);
    for (size_t j = 0; j < zeros.size(); ++j) {
      v[zeros[j] - 1] = (mask >> j) & 1 ? 1 : -1;
    }
    best = std::max(best, VarOf(v));
  }
  return best;
}

// Leibniz expansion.
inline Rational LeibnizDeterminant(const RationalMatrix& a) {
  const int n = a.rows();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) inversions += p[i] > p[j];
    }
    Rational term = inversions % 2 ? -1 : 1;
    for (int i = 0; i < n; ++i) term *= a(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

inline int64_t Choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// All fillings over "0+" of the given shape with the Le property, checked by
// the definition: no 0 with a + to its left and a + above.
inline std::vector<std::vector<std::string>> LeFillings(
    const std::vector<int>& shape) {
  int boxes = 0;
  for (int len : shape) boxes += len;
  std::vector<std::vector<std::string>> out;
  for (long mask = 0; mask < (1L << boxes); ++mask) {
    std::vector<std::string> rows;
    int bit = 0;
    for (int len : shape) {
      std::string row;
      for (int c = 0; c < len; ++c) row += (mask >> bit++) & 1 ? '+' : '0';
      rows.push_back(row);
    }
    bool ok = true;
    for (size_t r = 0; r < rows.size() && ok; ++r) {
      for (size_t c = 0; c < rows[r].size() && ok; ++c) {
        if (rows[r][c] != '0') continue;
        bool left = false, above = false;
        for (size_t cc = 0; cc < c; ++cc) left |= rows[r][cc] == '+';
        for (size_t rr = 0; rr < r; ++rr) above |= rows[rr][c] == '+';
        ok = !(left && above);
      }
    }
    if (ok) out.push_back(rows);
  }
  return out;
}

// Partitions with at most k parts, each at most w, listed weakly decreasing.
inline void Partitions(int k, int w, std::vector<int>& prefix,
                       std::vector<std::vector<int>>& out) {
  if (static_cast<int>(prefix.size()) == k) {
    out.push_back(prefix);
    return;
  }
  const int cap = prefix.empty() ? w : prefix.back();
  for (int len = 0; len <= cap; ++len) {
    prefix.push_back(len);
    Partitions(k, w, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace amplikit::oracle

#endif  // AMPLIKIT_TESTS_ORACLES_H_
