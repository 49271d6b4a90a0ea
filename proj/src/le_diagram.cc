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

#include <algorithm>
#include <functional>
#include <numeric>

#include "amplikit/errors.h"

namespace amplikit {

bool HasLeProperty(const std::vector<std::string>& rows) {
  for (size_t r = 0; r < rows.size(); ++r) {
    for (size_t c = 0; c < rows[r].size(); ++c) {
      if (rows[r][c] != '0') continue;
      bool left = false;
      for (size_t j = 0; j < c; ++j) left = left || rows[r][j] == '+';
      if (!left) continue;
      for (size_t i = 0; i < r; ++i) {
        if (rows[i][c] == '+') return false;
      }
    }
  }
  return true;
}

LeDiagram::LeDiagram(int k, int n, std::vector<std::string> rows)
    : k_(k), n_(n), rows_(std::move(rows)) {
  CheckArgument(k >= 0 && n >= k, "need 0 <= k <= n");
  CheckArgument(static_cast<int>(rows_.size()) == k,
                "diagram must have exactly k rows");
  for (int r = 0; r < k; ++r) {
    CheckArgument(static_cast<int>(rows_[r].size()) <= n - k,
                  "row longer than n-k");
    if (r > 0) {
      CheckArgument(rows_[r].size() <= rows_[r - 1].size(),
                    "row lengths must weakly decrease");
    }
    for (char ch : rows_[r]) {
      CheckArgument(ch == '0' || ch == '+', "fill symbols must be '0' or '+'");
    }
  }
  CheckArgument(HasLeProperty(rows_), "fill violates the Le property");
  ComputeLabels();
}

LeDiagram LeDiagram::Zero(int k, int n, const std::vector<int>& shape) {
  CheckArgument(static_cast<int>(shape.size()) <= k, "too many parts");
  std::vector<std::string> rows(k);
  for (size_t r = 0; r < shape.size(); ++r) {
    CheckArgument(shape[r] >= 0, "negative part");
    rows[r] = std::string(shape[r], '0');
  }
  return LeDiagram(k, n, std::move(rows));
}

void LeDiagram::ComputeLabels() {
  vertical_label_.assign(k_, 0);
  horizontal_label_.assign(n_ - k_, 0);
  int label = 1;
  int x = n_ - k_;
  for (int r = 0; r < k_; ++r) {
    while (x > static_cast<int>(rows_[r].size())) {
      horizontal_label_[x - 1] = label++;
      --x;
    }
    vertical_label_[r] = label++;
  }
  while (x > 0) {
    horizontal_label_[x - 1] = label++;
    --x;
  }
}

std::vector<int> LeDiagram::Shape() const {
  std::vector<int> s;
  for (const std::string& row : rows_) s.push_back(static_cast<int>(row.size()));
  return s;
}

int LeDiagram::ColumnHeight(int c) const {
  int h = 0;
  for (const std::string& row : rows_) {
    if (static_cast<int>(row.size()) >= c) ++h;
  }
  return h;
}

bool LeDiagram::RowHasPlus(int r) const {
  return rows_[r - 1].find('+') != std::string::npos;
}

bool LeDiagram::ColumnHasPlus(int c) const {
  for (const std::string& row : rows_) {
    if (static_cast<int>(row.size()) >= c && row[c - 1] == '+') return true;
  }
  return false;
}

int LeDiagram::NumPluses() const {
  int count = 0;
  for (const std::string& row : rows_) {
    count += static_cast<int>(std::count(row.begin(), row.end(), '+'));
  }
  return count;
}

int LeDiagram::NumBoxes() const {
  int count = 0;
  for (const std::string& row : rows_) count += static_cast<int>(row.size());
  return count;
}

std::vector<int> LeDiagram::VerticalSteps() const {
  std::vector<int> v = vertical_label_;
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<int> LeDiagram::HorizontalSteps() const {
  std::vector<int> h = horizontal_label_;
  std::sort(h.begin(), h.end());
  return h;
}

int LeDiagram::RowOfLabel(int label) const {
  for (int r = 0; r < k_; ++r) {
    if (vertical_label_[r] == label) return r + 1;
  }
  return 0;
}

int LeDiagram::ColumnOfLabel(int label) const {
  for (int c = 0; c < n_ - k_; ++c) {
    if (horizontal_label_[c] == label) return c + 1;
  }
  return 0;
}

std::string LeDiagram::ToString() const {
  std::string s = "[";
  for (int r = 0; r < k_; ++r) {
    if (r > 0) s += ";";
    s += rows_[r];
  }
  return s + "]";
}

std::vector<LeDiagram> AllLeDiagrams(int k, int n) {
  CheckArgument(k >= 0 && n >= k, "need 0 <= k <= n");
  CheckScale(n <= 10, "Le-diagram enumeration limited to n <= 10");
  const int width = n - k;
  std::vector<LeDiagram> out;
  std::vector<int> shape(k, 0);
  // Shapes: weakly decreasing sequences in [0, width].
  std::function<void(int, int)> shapes = [&](int r, int max_len) {
    if (r == k) {
      std::vector<std::string> rows(k);
      for (int i = 0; i < k; ++i) rows[i] = std::string(shape[i], '0');
      std::vector<bool> column_plus(width + 1, false);
      std::function<void(int, int)> fill = [&](int i, int c) {
        if (i == k) {
          out.emplace_back(k, n, rows);
          return;
        }
        if (c > shape[i]) {
          fill(i + 1, 1);
          return;
        }
        bool left_plus = rows[i].find('+') < static_cast<size_t>(c - 1);
        if (!(left_plus && column_plus[c])) {
          rows[i][c - 1] = '0';
          fill(i, c + 1);
        }
        const bool saved = column_plus[c];
        rows[i][c - 1] = '+';
        column_plus[c] = true;
        fill(i, c + 1);
        column_plus[c] = saved;
        rows[i][c - 1] = '0';
      };
      fill(0, 1);
      return;
    }
    for (int len = 0; len <= max_len; ++len) {
      shape[r] = len;
      shapes(r + 1, len);
    }
  };
  shapes(0, width);
  std::sort(out.begin(), out.end());
  return out;
}

DecoratedPermutation::DecoratedPermutation(std::vector<int> images,
                                           std::vector<int> white_fixed)
    : images_(std::move(images)), white_fixed_(std::move(white_fixed)) {
  const int n = static_cast<int>(images_.size());
  inverse_.assign(n, 0);
  for (int i = 1; i <= n; ++i) {
    const int j = images_[i - 1];
    CheckArgument(j >= 1 && j <= n && inverse_[j - 1] == 0,
                  "images must form a permutation of [n]");
    inverse_[j - 1] = i;
  }
  std::sort(white_fixed_.begin(), white_fixed_.end());
  white_fixed_.erase(std::unique(white_fixed_.begin(), white_fixed_.end()),
                     white_fixed_.end());
  for (int w : white_fixed_) {
    CheckArgument(w >= 1 && w <= n && images_[w - 1] == w,
                  "white_fixed must list fixed points");
  }
}

bool DecoratedPermutation::IsWhite(int i) const {
  return std::binary_search(white_fixed_.begin(), white_fixed_.end(), i);
}

std::vector<int> DecoratedPermutation::AntiExcedances() const {
  std::vector<int> out;
  for (int i = 1; i <= n(); ++i) {
    if (Inverse(i) > i || IsWhite(i)) out.push_back(i);
  }
  return out;
}

std::string DecoratedPermutation::ToString() const {
  std::string s = "(";
  for (int i = 1; i <= n(); ++i) {
    if (i > 1) s += ",";
    s += std::to_string(images_[i - 1]);
    if (IsFixed(i)) s += IsWhite(i) ? "̄" : "̲";
  }
  return s + ")";
}

std::vector<DecoratedPermutation> AllDecoratedPermutations(int n, int k) {
  CheckArgument(n >= 0 && k >= 0 && k <= n, "need 0 <= k <= n");
  CheckScale(n <= 9, "decorated permutation enumeration limited to n <= 9");
  std::vector<DecoratedPermutation> out;
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  do {
    std::vector<int> fixed;
    for (int i = 1; i <= n; ++i) {
      if (images[i - 1] == i) fixed.push_back(i);
    }
    const int f = static_cast<int>(fixed.size());
    for (uint32_t mask = 0; mask < (uint32_t{1} << f); ++mask) {
      std::vector<int> white;
      for (int j = 0; j < f; ++j) {
        if (mask >> j & 1) white.push_back(fixed[j]);
      }
      DecoratedPermutation p(images, white);
      if (static_cast<int>(p.AntiExcedances().size()) == k) out.push_back(p);
    }
  } while (std::next_permutation(images.begin(), images.end()));
  std::sort(out.begin(), out.end());
  return out;
}

DecoratedPermutation LeToPermutation(const LeDiagram& d) {
  const int n = d.n();
  std::vector<int> images(n, 0);
  std::vector<int> white;
  for (int label = 1; label <= n; ++label) {
    int r, c;
    bool west;  // Heading west (else north).
    if (int row = d.RowOfLabel(label); row != 0) {
      r = row;
      c = d.RowLength(row);
      west = true;
    } else {
      c = d.ColumnOfLabel(label);
      r = d.ColumnHeight(c);
      west = false;
    }
    while (r >= 1 && c >= 1) {
      const bool elbow = d.Plus(r, c);
      if (elbow) west = !west;
      if (west) {
        --c;
      } else {
        --r;
      }
    }
    const int exit_label = west ? d.VerticalLabel(r) : d.HorizontalLabel(c);
    images[label - 1] = exit_label;
    if (exit_label == label && d.RowOfLabel(label) != 0) white.push_back(label);
  }
  return DecoratedPermutation(std::move(images), std::move(white));
}

LeDiagram PermutationToLe(const DecoratedPermutation& pi) {
  const int n = pi.n();
  const std::vector<int> anti = pi.AntiExcedances();
  const int k = static_cast<int>(anti.size());
  const int width = n - k;
  std::vector<int> shape;
  {
    int x = width;
    for (int label = 1; label <= n; ++label) {
      if (std::binary_search(anti.begin(), anti.end(), label)) {
        shape.push_back(x);
      } else {
        --x;
      }
    }
  }
  const LeDiagram frame = LeDiagram::Zero(k, n, shape);
  for (int c = 1; c <= width; ++c) {
    const int h = frame.HorizontalLabel(c);
    if (frame.ColumnHeight(c) == 0 && pi(h) != h) {
      throw InvalidArgument("permutation is not realized by any Le-diagram");
    }
  }

  std::vector<std::string> rows(k);
  for (int r = 0; r < k; ++r) rows[r] = std::string(shape[r], '0');
  std::vector<int> down(width + 1);
  for (int c = 1; c <= width; ++c) down[c] = frame.HorizontalLabel(c);
  std::vector<bool> column_plus(width + 1, false);

  auto reachable = [&](int pipe, int r, int c) {
    const int target = pi.Inverse(pipe);
    return frame.VerticalLabel(r) <= target &&
           target <= frame.HorizontalLabel(c);
  };

  // Boxes in reading order; `east` is the pipe entering the current box from
  // the west.
  std::function<bool(int, int, int)> search = [&](int r, int c,
                                                   int east) -> bool {
    if (r > k) return true;
    if (c == 1 && shape[r - 1] == 0) {
      const int v = frame.VerticalLabel(r);
      if (pi(v) != v) return false;
      return search(r + 1, 1, r < k ? frame.VerticalLabel(r + 1) : 0);
    }
    const int north = down[c];
    if (!reachable(east, r, c) || !reachable(north, r, c)) return false;
    const bool left_plus = rows[r - 1].find('+') < static_cast<size_t>(c - 1);
    for (int choice = 0; choice < 2; ++choice) {
      const bool plus = choice == 1;
      if (!plus && left_plus && column_plus[c]) continue;
      const int go_east = plus ? north : east;
      const int go_south = plus ? east : north;
      // Pipes leaving through the southeast border must end where pi says.
      if (frame.ColumnHeight(c) == r &&
          pi(frame.HorizontalLabel(c)) != go_south) {
        continue;
      }
      const bool row_end = c == shape[r - 1];
      if (row_end && pi(frame.VerticalLabel(r)) != go_east) continue;
      rows[r - 1][c - 1] = plus ? '+' : '0';
      const bool saved_column = column_plus[c];
      if (plus) column_plus[c] = true;
      down[c] = go_south;
      const bool found =
          row_end ? search(r + 1, 1, r < k ? frame.VerticalLabel(r + 1) : 0)
                  : search(r, c + 1, go_east);
      if (found) return true;
      down[c] = north;
      column_plus[c] = saved_column;
      rows[r - 1][c - 1] = '0';
    }
    return false;
  };
  if (!search(1, 1, k >= 1 ? frame.VerticalLabel(1) : 0)) {
    throw InvalidArgument("permutation is not realized by any Le-diagram");
  }
  LeDiagram d(k, n, rows);
  if (!(LeToPermutation(d) == pi)) {
    throw InvalidArgument("permutation decoration is inconsistent");
  }
  return d;
}

}  // namespace amplikit
