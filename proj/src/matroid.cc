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

#include "amplikit/matroid.h"

#include <algorithm>
#include <bit>
#include <numeric>

#include "amplikit/errors.h"

namespace amplikit {

Matroid::Matroid(int n, int rank, std::vector<SubsetMask> bases)
    : Matroid(n >= 32 ? ~SubsetMask{0} : (SubsetMask{1} << n) - 1, rank,
              std::move(bases)) {
  CheckArgument(n >= 0 && n <= 32, "ground set size out of range");
}

Matroid::Matroid(SubsetMask ground, int rank, std::vector<SubsetMask> bases)
    : ground_(ground), rank_(rank), bases_(std::move(bases)) {
  Validate();
}

void Matroid::Validate() {
  std::sort(bases_.begin(), bases_.end());
  bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
  CheckArgument(!bases_.empty(), "a matroid needs at least one basis");
  for (SubsetMask b : bases_) {
    CheckArgument((b & ~ground_) == 0, "basis not contained in ground set");
    CheckArgument(std::popcount(b) == rank_, "basis of the wrong size");
  }
  if (size() <= 8) {
    CheckArgument(SatisfiesBasisExchange(bases_),
                  "bases violate the exchange axiom");
  }
}

Matroid Matroid::Uniform(SubsetMask ground, int rank) {
  std::vector<int> elems = MaskElements(ground);
  const int m = static_cast<int>(elems.size());
  CheckArgument(rank >= 0 && rank <= m, "rank out of range");
  std::vector<SubsetMask> bases;
  for (SubsetMask local : KSubsets(m, rank)) {
    SubsetMask b = 0;
    for (int e : MaskElements(local)) b |= SubsetMask{1} << (elems[e - 1] - 1);
    bases.push_back(b);
  }
  return Matroid(ground, rank, std::move(bases));
}

int Matroid::size() const { return std::popcount(ground_); }

bool Matroid::IsBasis(SubsetMask set) const {
  return std::binary_search(bases_.begin(), bases_.end(), set);
}

SubsetMask Matroid::Loops() const {
  SubsetMask used = 0;
  for (SubsetMask b : bases_) used |= b;
  return ground_ & ~used;
}

SubsetMask Matroid::Coloops() const {
  SubsetMask common = ground_;
  for (SubsetMask b : bases_) common &= b;
  return common;
}

Matroid Matroid::Dual() const {
  std::vector<SubsetMask> dual;
  for (SubsetMask b : bases_) dual.push_back(ground_ & ~b);
  return Matroid(ground_, size() - rank_, std::move(dual));
}

Matroid Matroid::Restriction(SubsetMask f) const {
  CheckArgument((f & ~ground_) == 0, "restriction set not in ground set");
  int best = 0;
  for (SubsetMask b : bases_) best = std::max(best, std::popcount(b & f));
  std::vector<SubsetMask> out;
  for (SubsetMask b : bases_) {
    if (std::popcount(b & f) == best) out.push_back(b & f);
  }
  return Matroid(f, best, std::move(out));
}

std::vector<SubsetMask> Matroid::ConnectedComponents() const {
  std::vector<int> parent(33);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const std::vector<int> elems = MaskElements(ground_);
  for (SubsetMask b : bases_) {
    for (int x : MaskElements(b)) {
      for (int y : elems) {
        const SubsetMask ybit = SubsetMask{1} << (y - 1);
        if (b & ybit) continue;
        if (IsBasis((b & ~(SubsetMask{1} << (x - 1))) | ybit)) {
          parent[find(x)] = find(y);
        }
      }
    }
  }
  std::vector<SubsetMask> comps;
  for (int x : elems) {
    const int root = find(x);
    SubsetMask c = 0;
    for (int y : elems) {
      if (find(y) == root) c |= SubsetMask{1} << (y - 1);
    }
    if (std::find(comps.begin(), comps.end(), c) == comps.end()) {
      comps.push_back(c);
    }
  }
  return comps;
}

std::string Matroid::ToString() const {
  std::string s = "rank " + std::to_string(rank_) + " on " +
                  FormatSubset(ground_) + ": ";
  for (size_t i = 0; i < bases_.size(); ++i) {
    if (i > 0) s += " ";
    s += FormatSubset(bases_[i]);
  }
  return s;
}

bool SatisfiesBasisExchange(const std::vector<SubsetMask>& bases) {
  std::vector<SubsetMask> sorted = bases;
  std::sort(sorted.begin(), sorted.end());
  auto is_basis = [&](SubsetMask s) {
    return std::binary_search(sorted.begin(), sorted.end(), s);
  };
  for (SubsetMask b1 : sorted) {
    for (SubsetMask b2 : sorted) {
      for (int x : MaskElements(b1 & ~b2)) {
        bool found = false;
        for (int y : MaskElements(b2 & ~b1)) {
          if (is_basis((b1 & ~(SubsetMask{1} << (x - 1))) |
                       (SubsetMask{1} << (y - 1)))) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

Matroid DirectSum(const Matroid& a, const Matroid& b) {
  CheckArgument((a.ground() & b.ground()) == 0,
                "direct sum needs disjoint ground sets");
  std::vector<SubsetMask> bases;
  for (SubsetMask x : a.bases()) {
    for (SubsetMask y : b.bases()) bases.push_back(x | y);
  }
  return Matroid(a.ground() | b.ground(), a.rank() + b.rank(),
                 std::move(bases));
}

bool WeakLeq(const Matroid& lower, const Matroid& upper) {
  CheckArgument(lower.ground() == upper.ground(), "ground sets differ");
  CheckArgument(lower.rank() == upper.rank(), "ranks differ");
  return std::includes(upper.bases().begin(), upper.bases().end(),
                       lower.bases().begin(), lower.bases().end());
}

}  // namespace amplikit
