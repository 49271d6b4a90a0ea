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

#include <algorithm>
#include <functional>
#include <set>

#include "amplikit/errors.h"

namespace amplikit {

namespace {

bool AtMostOnePlusPerRow(const LeDiagram& d) {
  for (const std::string& row : d.rows()) {
    if (std::count(row.begin(), row.end(), '+') > 1) return false;
  }
  return true;
}

bool PlusesAtRowEnds(const LeDiagram& d) {
  for (const std::string& row : d.rows()) {
    const size_t p = row.find('+');
    if (p != std::string::npos && p + 1 != row.size()) return false;
  }
  return true;
}

bool HasLProperty(const LeDiagram& d) {
  for (int r = 1; r <= d.k(); ++r) {
    for (int c = 1; c <= d.RowLength(r); ++c) {
      if (d.Plus(r, c)) continue;
      bool above = false;
      for (int i = 1; i < r; ++i) above = above || d.Plus(i, c);
      bool right = false;
      for (int j = c + 1; j <= d.RowLength(r); ++j) right = right || d.Plus(r, j);
      if (above && right) return false;
    }
  }
  return true;
}

void CheckType(int n, int k) {
  CheckArgument(n >= 1 && k >= 0 && k <= n - 1, "need n >= 1, 0 <= k <= n-1");
}

}  // namespace

std::string FamilyName(DiagramFamily family) {
  switch (family) {
    case DiagramFamily::kD:
      return "D";
    case DiagramFamily::kDBar:
      return "Dbar";
    case DiagramFamily::kL:
      return "L";
    case DiagramFamily::kLBar:
      return "Lbar";
  }
  return "";
}

bool InFamily(const LeDiagram& d, DiagramFamily family) {
  if (!AtMostOnePlusPerRow(d)) return false;
  switch (family) {
    case DiagramFamily::kD:
      return PlusesAtRowEnds(d) && d.NumPluses() == d.k();
    case DiagramFamily::kDBar:
      return PlusesAtRowEnds(d);
    case DiagramFamily::kL:
      return HasLProperty(d) && d.NumPluses() == d.k();
    case DiagramFamily::kLBar:
      return HasLProperty(d);
  }
  return false;
}

std::vector<LeDiagram> EnumerateFamily(int n, int k, DiagramFamily family) {
  CheckType(n, k);
  std::vector<LeDiagram> out;
  if (family == DiagramFamily::kL || family == DiagramFamily::kLBar) {
    for (const LeDiagram& d : AllLeDiagrams(k, n)) {
      if (InFamily(d, family)) out.push_back(d);
    }
    return out;
  }
  CheckScale(n <= 24, "family enumeration limited to n <= 24");
  const int width = n - k;
  std::vector<std::string> rows(k);
  std::function<void(int, int)> build = [&](int r, int max_len) {
    if (r == k) {
      out.emplace_back(k, n, rows);
      return;
    }
    const int min_len = family == DiagramFamily::kD ? 1 : 0;
    for (int len = min_len; len <= max_len; ++len) {
      std::vector<bool> options;
      if (family == DiagramFamily::kD) {
        options = {true};
      } else if (len == 0) {
        options = {false};
      } else {
        options = {false, true};
      }
      for (bool plus : options) {
        rows[r] = std::string(len, '0');
        if (plus) rows[r][len - 1] = '+';
        build(r + 1, len);
      }
    }
  };
  build(0, width);
  std::sort(out.begin(), out.end());
  return out;
}

DecoratedPermutation IntervalCyclePermutation(int n,
                                              const std::vector<int>& ends) {
  CheckArgument(!ends.empty() && ends.back() == n, "last block must end at n");
  std::vector<int> images(n);
  int start = 1;
  for (int e : ends) {
    CheckArgument(e >= start && e <= n, "blocks must be increasing intervals");
    images[start - 1] = e;
    for (int j = start + 1; j <= e; ++j) images[j - 1] = j - 1;
    start = e + 1;
  }
  return DecoratedPermutation(std::move(images), {});
}

std::vector<LeDiagram> BcfwCells(int n, int k) {
  CheckType(n, k);
  CheckScale(n <= 16, "BCFW enumeration limited to n <= 16");
  // Grow compositions of [m] one element at a time.
  std::vector<std::vector<int>> compositions = {{1}};
  for (int m = 2; m <= n; ++m) {
    std::vector<std::vector<int>> next;
    for (const std::vector<int>& ends : compositions) {
      std::vector<int> lollipop = ends;
      lollipop.push_back(m);
      next.push_back(std::move(lollipop));
      std::vector<int> extended = ends;
      extended.back() = m;
      next.push_back(std::move(extended));
    }
    compositions = std::move(next);
  }
  std::vector<LeDiagram> out;
  for (const std::vector<int>& ends : compositions) {
    if (static_cast<int>(ends.size()) != n - k) continue;
    out.push_back(PermutationToLe(IntervalCyclePermutation(n, ends)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LeDiagram> Slide(const LeDiagram& d) {
  CheckArgument(InFamily(d, DiagramFamily::kLBar), "Slide needs D in Lbar");
  const int n = d.n();
  // All-zero rows are coloops. They are deleted before sliding and put back
  // afterwards on the same border labels; sliding only sees the border of
  // the reduced diagram.
  std::vector<bool> coloop_label(n + 1, false);
  std::vector<int> kept;
  for (int r = 1; r <= d.k(); ++r) {
    if (d.RowHasPlus(r)) {
      kept.push_back(r);
    } else {
      coloop_label[d.VerticalLabel(r)] = true;
    }
  }
  const int rows = static_cast<int>(kept.size());
  auto len = [&](int j) { return j < rows ? d.RowLength(kept[j]) : 0; };
  // Per kept row: the possible (new length, keeps plus) outcomes.
  std::vector<std::vector<std::pair<int, bool>>> choices(rows);
  for (int j = 0; j < rows; ++j) {
    const int c = static_cast<int>(d.rows()[kept[j] - 1].find('+')) + 1;
    for (int target = std::max(c, len(j + 1)); target <= len(j); ++target) {
      choices[j].push_back({target, true});
      if (target > c && target > len(j + 1)) {
        choices[j].push_back({target - 1, false});
      }
    }
  }
  std::set<LeDiagram> out;
  std::vector<std::pair<int, bool>> picked(rows);
  std::function<void(int)> pick = [&](int j) {
    if (j < rows) {
      for (const auto& choice : choices[j]) {
        picked[j] = choice;
        pick(j + 1);
      }
      return;
    }
    // Border steps of the reduced diagram: 0 for horizontal, 1 for a row
    // with a +, 2 for a row without one.
    std::vector<int> steps;
    int column = d.width();
    for (const auto& [length, plus] : picked) {
      for (; column > length; --column) steps.push_back(0);
      steps.push_back(plus ? 1 : 2);
    }
    for (; column > 0; --column) steps.push_back(0);
    std::vector<int> full;
    size_t next = 0;
    for (int label = 1; label <= n; ++label) {
      full.push_back(coloop_label[label] ? 2 : steps[next++]);
    }
    std::vector<std::string> fill;
    for (int label = 0; label < n; ++label) {
      if (full[label] == 0) continue;
      const int length = static_cast<int>(
          std::count(full.begin() + label + 1, full.end(), 0));
      std::string row(length, '0');
      if (full[label] == 1) row.back() = '+';
      fill.push_back(std::move(row));
    }
    out.insert(LeDiagram(d.k(), n, fill));
  };
  pick(0);
  return std::vector<LeDiagram>(out.begin(), out.end());
}

std::vector<LeDiagram> CoverRelations(const LeDiagram& d) {
  CheckArgument(InFamily(d, DiagramFamily::kDBar),
                "cover relations need D in Dbar");
  std::set<LeDiagram> out;
  for (int r = 1; r <= d.k(); ++r) {
    if (!d.RowHasPlus(r)) continue;
    const int c = d.RowLength(r);
    std::vector<std::string> rows = d.rows();
    rows[r - 1][c - 1] = '0';
    out.insert(LeDiagram(d.k(), d.n(), rows));
    bool plus_below = false;
    for (int i = r + 1; i <= d.ColumnHeight(c); ++i) {
      plus_below = plus_below || d.Plus(i, c);
    }
    if (plus_below) continue;
    rows = d.rows();
    for (int i = r; i <= d.ColumnHeight(c); ++i) rows[i - 1].pop_back();
    out.insert(LeDiagram(d.k(), d.n(), rows));
  }
  return std::vector<LeDiagram>(out.begin(), out.end());
}

std::vector<LeDiagram> DownSet(const LeDiagram& d) {
  std::set<LeDiagram> seen = {d};
  std::vector<LeDiagram> stack = {d};
  while (!stack.empty()) {
    LeDiagram cur = stack.back();
    stack.pop_back();
    if (cur.NumPluses() == 0) continue;
    for (const LeDiagram& e : CoverRelations(cur)) {
      if (seen.insert(e).second) stack.push_back(e);
    }
  }
  return std::vector<LeDiagram>(seen.begin(), seen.end());
}

}  // namespace amplikit
