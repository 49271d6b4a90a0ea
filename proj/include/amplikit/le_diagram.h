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

// Le-diagrams of type (k, n), decorated permutations, and the pipe-dream
// bijection between them.
//
// A diagram of type (k, n) is a Young diagram inside the k x (n-k) box whose
// boxes hold '0' or '+'. Its southeast border runs from the northeast corner
// of the box to the southwest corner in n unit steps, labeled 1..n in that
// order. Row r owns one vertical step, column c one horizontal step; rows may
// be empty.

#ifndef AMPLIKIT_LE_DIAGRAM_H_
#define AMPLIKIT_LE_DIAGRAM_H_

#include <compare>
#include <string>
#include <vector>

namespace amplikit {

class LeDiagram {
 public:
  LeDiagram() = default;
  // rows[r] is the fill of row r+1, top to bottom, a string over "0+".
  // Throws if the shape is not a partition in the box or if a 0 has a + above
  // it in its column and a + to its left in its row.
  LeDiagram(int k, int n, std::vector<std::string> rows);

  // Empty fill of the given shape (all boxes 0). The shape may have fewer
  // than k parts; missing parts are 0.
  static LeDiagram Zero(int k, int n, const std::vector<int>& shape);

  int k() const { return k_; }
  int n() const { return n_; }
  int width() const { return n_ - k_; }

  const std::vector<std::string>& rows() const { return rows_; }
  std::vector<int> Shape() const;
  int RowLength(int r) const { return static_cast<int>(rows_[r - 1].size()); }
  int ColumnHeight(int c) const;
  // 1-based row and column; true for '+'.
  bool Plus(int r, int c) const { return rows_[r - 1][c - 1] == '+'; }
  bool RowHasPlus(int r) const;
  bool ColumnHasPlus(int c) const;
  int NumPluses() const;
  int NumBoxes() const;

  // Labels of the southeast border.
  int VerticalLabel(int r) const { return vertical_label_[r - 1]; }
  int HorizontalLabel(int c) const { return horizontal_label_[c - 1]; }
  // Sorted labels of vertical (resp. horizontal) steps.
  std::vector<int> VerticalSteps() const;
  std::vector<int> HorizontalSteps() const;
  // Row owning a vertical label, or column owning a horizontal one; 0 if the
  // label has the other orientation.
  int RowOfLabel(int label) const;
  int ColumnOfLabel(int label) const;

  // Compact form such as "[0+;+]"; an empty row prints as nothing.
  std::string ToString() const;

  friend bool operator==(const LeDiagram& a, const LeDiagram& b) {
    return a.k_ == b.k_ && a.n_ == b.n_ && a.rows_ == b.rows_;
  }
  friend std::strong_ordering operator<=>(const LeDiagram& a,
                                          const LeDiagram& b) {
    if (auto c = a.k_ <=> b.k_; c != 0) return c;
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.rows_ <=> b.rows_;
  }

 private:
  void ComputeLabels();

  int k_ = 0;
  int n_ = 0;
  std::vector<std::string> rows_;
  std::vector<int> vertical_label_;
  std::vector<int> horizontal_label_;
};

// True iff the fill has the Le property (no 0 with a + above and a + left).
bool HasLeProperty(const std::vector<std::string>& rows);

// All Le-diagrams of type (k, n), sorted.
std::vector<LeDiagram> AllLeDiagrams(int k, int n);

// A permutation of [n] whose fixed points are colored black or white.
class DecoratedPermutation {
 public:
  DecoratedPermutation() = default;
  // images[i-1] = pi(i). white_fixed lists the white fixed points; all other
  // fixed points are black.
  DecoratedPermutation(std::vector<int> images, std::vector<int> white_fixed);

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  int Inverse(int i) const { return inverse_[i - 1]; }
  bool IsFixed(int i) const { return images_[i - 1] == i; }
  bool IsWhite(int i) const;
  bool IsBlack(int i) const { return IsFixed(i) && !IsWhite(i); }

  const std::vector<int>& images() const { return images_; }
  const std::vector<int>& white_fixed() const { return white_fixed_; }

  // i with pi^{-1}(i) > i, or i a white fixed point.
  std::vector<int> AntiExcedances() const;
  // One-line notation with black fixed points underlined and white fixed
  // points overlined (combining characters), e.g. "(1̲,3,2)".
  std::string ToString() const;

  friend bool operator==(const DecoratedPermutation&,
                         const DecoratedPermutation&) = default;
  friend std::strong_ordering operator<=>(const DecoratedPermutation& a,
                                          const DecoratedPermutation& b) {
    if (auto c = a.images_ <=> b.images_; c != 0) return c;
    return a.white_fixed_ <=> b.white_fixed_;
  }

 private:
  std::vector<int> images_;
  std::vector<int> inverse_;
  std::vector<int> white_fixed_;  // Sorted.
};

// Decorated permutations of [n] with exactly k anti-excedances, sorted.
std::vector<DecoratedPermutation> AllDecoratedPermutations(int n, int k);

// Pipe dream: every + is an elbow, every 0 a crossing. A pipe enters at the
// southeast border edge labeled i, travels north-west, and leaves at the
// border edge opposite the edge labeled j; then pi(i) = j. Fixed points on
// horizontal steps are black, on vertical steps white.
DecoratedPermutation LeToPermutation(const LeDiagram& d);

// Inverse of LeToPermutation. The shape is read off from the anti-excedances;
// the fill is found by a depth-first search over boxes in reading order,
// pruned by the Le property and by the border interval each pipe can still
// reach.
LeDiagram PermutationToLe(const DecoratedPermutation& pi);

}  // namespace amplikit

#endif  // AMPLIKIT_LE_DIAGRAM_H_
