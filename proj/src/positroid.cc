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

#include "amplikit/positroid.h"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <unordered_set>

#include "amplikit/errors.h"
#include "amplikit/plabic_graph.h"

namespace amplikit {

namespace {

SubsetMask Bit(int e) { return SubsetMask{1} << (e - 1); }

SubsetMask FullSet(int n) { return n >= 32 ? ~SubsetMask{0} : Bit(n + 1) - 1; }

}  // namespace

void ValidateCode(const IntervalPartitionCode& code) {
  CheckArgument(code.n >= 1, "code needs n >= 1");
  CheckArgument(!code.intervals.empty(), "code needs at least one interval");
  CheckArgument((code.coloops & ~FullSet(code.n)) == 0, "C not inside [n]");
  int expect = 1;
  for (const auto& [lo, hi] : code.intervals) {
    CheckArgument(lo == expect && hi >= lo, "intervals must tile [n] in order");
    expect = hi + 1;
    SubsetMask block = 0;
    for (int e = lo; e <= hi; ++e) block |= Bit(e);
    CheckArgument((block & ~code.coloops) != 0,
                  "every block needs an element outside C");
    CheckArgument(hi == code.n || !(code.coloops & Bit(hi)),
                  "block maximum may lie in C only if it is n");
  }
  CheckArgument(expect == code.n + 1, "intervals must tile [n] in order");
}

std::string FormatCode(const IntervalPartitionCode& code) {
  std::string s;
  for (const auto& [lo, hi] : code.intervals) {
    s += "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
  }
  return s + " C=" + FormatSubset(code.coloops);
}

Matroid DecodeCode(const IntervalPartitionCode& code) {
  ValidateCode(code);
  std::vector<SubsetMask> bases = {0};
  int rank = 0;
  for (const auto& [lo, hi] : code.intervals) {
    SubsetMask block = 0;
    for (int e = lo; e <= hi; ++e) block |= Bit(e);
    const SubsetMask c = block & code.coloops;
    const SubsetMask free = block & ~code.coloops;
    std::vector<SubsetMask> local;
    for (int drop : MaskElements(free)) local.push_back(c | (free & ~Bit(drop)));
    std::vector<SubsetMask> next;
    for (SubsetMask b : bases) {
      for (SubsetMask l : local) next.push_back(b | l);
    }
    bases = std::move(next);
    rank += std::popcount(block) - 1;
  }
  return Matroid(code.n, rank, std::move(bases));
}

IntervalPartitionCode EncodeCode(const Matroid& m) {
  const int n = m.size();
  CheckArgument(m.ground() == FullSet(n), "ground set must be [n]");
  const SubsetMask coloops = m.Coloops();
  const std::vector<SubsetMask> comps = m.ConnectedComponents();
  auto comp_of = [&](int e) {
    for (size_t i = 0; i < comps.size(); ++i) {
      if (comps[i] & Bit(e)) return static_cast<int>(i);
    }
    return -1;
  };
  std::vector<int> block_ends;  // Last non-coloop element of each block.
  std::set<int> used;
  int current = -1;
  for (int e = 1; e <= n; ++e) {
    if (coloops & Bit(e)) continue;
    const int c = comp_of(e);
    if (c != current) {
      CheckArgument(used.insert(c).second,
                    "matroid components are not intervals");
      current = c;
      block_ends.push_back(e);
    } else {
      block_ends.back() = e;
    }
  }
  CheckArgument(!block_ends.empty(), "matroid has only coloops");
  IntervalPartitionCode code;
  code.n = n;
  code.coloops = coloops;
  int lo = 1;
  for (size_t j = 0; j < block_ends.size(); ++j) {
    const int hi = j + 1 == block_ends.size() ? n : block_ends[j];
    code.intervals.push_back({lo, hi});
    lo = hi + 1;
  }
  ValidateCode(code);
  CheckArgument(DecodeCode(code) == m,
                "matroid is not in the closed m = 1 positroid family");
  return code;
}

std::vector<IntervalPartitionCode> AllCodes(int n, int k) {
  CheckArgument(n >= 1 && k >= 0 && k <= n - 1, "need 0 <= k <= n-1");
  CheckScale(n <= 16, "code enumeration limited to n <= 16");
  std::vector<IntervalPartitionCode> out;
  const int blocks = n - k;
  std::vector<int> ends;
  std::function<void(int)> split = [&](int start) {
    if (static_cast<int>(ends.size()) == blocks - 1) {
      ends.push_back(n);
      IntervalPartitionCode code;
      code.n = n;
      int lo = 1;
      SubsetMask optional = 0;
      for (int hi : ends) {
        code.intervals.push_back({lo, hi});
        for (int e = lo; e <= hi; ++e) {
          if (e != hi || hi == n) optional |= Bit(e);
        }
        lo = hi + 1;
      }
      // Enumerate subsets of the optional coloop positions.
      for (SubsetMask c = optional;; c = (c - 1) & optional) {
        code.coloops = c;
        bool ok = true;
        for (const auto& [a, b] : code.intervals) {
          SubsetMask block = 0;
          for (int e = a; e <= b; ++e) block |= Bit(e);
          ok = ok && (block & ~c) != 0;
        }
        if (ok) out.push_back(code);
        if (c == 0) break;
      }
      ends.pop_back();
      return;
    }
    for (int hi = start; hi <= n - 1; ++hi) {
      ends.push_back(hi);
      split(hi + 1);
      ends.pop_back();
    }
  };
  split(1);
  return out;
}

SignVector CodeSignVector(const IntervalPartitionCode& code) {
  ValidateCode(code);
  SignVector sigma(code.n);
  std::vector<int> block(code.n + 1);
  for (size_t j = 0; j < code.intervals.size(); ++j) {
    for (int e = code.intervals[j].first; e <= code.intervals[j].second; ++e) {
      block[e] = static_cast<int>(j);
    }
  }
  int s = 1;
  sigma.Set(1, s);
  for (int i = 1; i < code.n; ++i) {
    if (block[i] == block[i + 1]) s = -s;
    sigma.Set(i + 1, s);
  }
  for (int e : MaskElements(code.coloops)) sigma.Set(e, 0);
  return sigma;
}

Matroid PositroidOfDiagram(const LeDiagram& d) {
  const RationalMatrix a =
      CellRepresentative(d, RationalVector(d.NumPluses(), Rational(1)));
  return Matroid(d.n(), d.k(), PlueckerOfRows(a).Support());
}

std::vector<SubsetMask> GrassmannNecklace(const Matroid& m) {
  const int n = m.size();
  CheckArgument(m.ground() == FullSet(n), "ground set must be [n]");
  auto extendable = [&](SubsetMask s) {
    for (SubsetMask b : m.bases()) {
      if ((b & s) == s) return true;
    }
    return false;
  };
  std::vector<SubsetMask> necklace;
  for (int i = 1; i <= n; ++i) {
    SubsetMask s = 0;
    for (int t = 0; t < n; ++t) {
      const int e = (i - 1 + t) % n + 1;
      if (extendable(s | Bit(e))) s |= Bit(e);
    }
    necklace.push_back(s);
  }
  return necklace;
}

DecoratedPermutation NecklacePermutation(const Matroid& m) {
  const int n = m.size();
  const std::vector<SubsetMask> necklace = GrassmannNecklace(m);
  std::vector<int> images(n);
  std::vector<int> white;
  for (int i = 1; i <= n; ++i) {
    const SubsetMask cur = necklace[i - 1];
    const SubsetMask next = necklace[i % n];
    if (!(cur & Bit(i))) {
      images[i - 1] = i;  // Loop.
      continue;
    }
    const SubsetMask added = next & ~(cur & ~Bit(i));
    CheckArgument(std::popcount(added) == 1, "not a Grassmann necklace");
    const int j = std::countr_zero(added) + 1;
    images[i - 1] = j;
    if (j == i) white.push_back(i);
  }
  return DecoratedPermutation(std::move(images), std::move(white));
}

LeDiagram PositroidToLe(const Matroid& m) {
  const LeDiagram d = PermutationToLe(NecklacePermutation(m));
  CheckArgument(PositroidOfDiagram(d) == m, "matroid is not a positroid");
  return d;
}

namespace {

// Sign vectors packed as (positive mask) | (negative mask << 32).
using Packed = uint64_t;

Packed Pack(const SignVector& s) {
  Packed p = 0;
  for (int i = 1; i <= s.size(); ++i) {
    if (s[i] > 0) p |= Packed{1} << (i - 1);
    if (s[i] < 0) p |= Packed{1} << (i - 1 + 32);
  }
  return p;
}

SignVector Unpack(Packed p, int n) {
  SignVector s(n);
  for (int i = 1; i <= n; ++i) {
    if (p >> (i - 1) & 1) s.Set(i, 1);
    if (p >> (i - 1 + 32) & 1) s.Set(i, -1);
  }
  return s;
}

Packed ComposePacked(Packed a, Packed b) {
  const Packed support = (a | (a >> 32)) & 0xffffffffu;
  const Packed keep = ~(support | (support << 32));
  return a | (b & keep);
}

}  // namespace

std::vector<SignVector> Circuits(const Subspace& v) {
  const int n = v.ambient();
  CheckScale(n <= 16, "circuit enumeration limited to n <= 16");
  const Subspace perp = v.OrthogonalComplement();
  const int r = perp.dim();
  std::set<SignVector> out;
  if (r == 0) return {};
  for (SubsetMask cols : KSubsets(n, r)) {
    std::vector<int> order;
    for (int e : MaskElements(cols)) order.push_back(e - 1);
    for (int c = 0; c < n; ++c) {
      if (!(cols & Bit(c + 1))) order.push_back(c);
    }
    const RowEchelonForm ref =
        ReducedRowEchelon(perp.basis().SelectColumns(order));
    bool is_basis = true;
    for (int i = 0; i < r; ++i) is_basis = is_basis && ref.pivots[i] == i;
    if (!is_basis) continue;
    for (int i = 0; i < r; ++i) {
      RationalVector row(n);
      for (int j = 0; j < n; ++j) row[order[j]] = ref.reduced(i, j);
      const SignVector s = SignOf(row);
      out.insert(s);
      out.insert(s.Negated());
    }
  }
  return std::vector<SignVector>(out.begin(), out.end());
}

std::vector<SignVector> CompositionClosure(
    const std::vector<SignVector>& circuits) {
  int n = circuits.empty() ? 0 : circuits[0].size();
  CheckArgument(n <= 32, "sign vectors too long");
  std::vector<Packed> list = {0};
  std::unordered_set<Packed> seen = {0};
  for (const SignVector& c : circuits) {
    CheckArgument(c.size() == n, "circuits of different lengths");
    if (seen.insert(Pack(c)).second) list.push_back(Pack(c));
  }
  for (size_t i = 0; i < list.size(); ++i) {
    for (size_t j = 0; j <= i; ++j) {
      for (Packed x : {ComposePacked(list[i], list[j]),
                       ComposePacked(list[j], list[i])}) {
        if (seen.insert(x).second) list.push_back(x);
      }
    }
  }
  std::vector<SignVector> out;
  for (Packed p : list) out.push_back(Unpack(p, n));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SignVector> BruteForceVectors(const Subspace& v) {
  CheckScale(v.ambient() <= 9, "brute-force vectors limited to n <= 9");
  const Subspace perp = v.OrthogonalComplement();
  std::vector<SignVector> out;
  for (const SignVector& s : AllSignVectors(v.ambient())) {
    if (FindVectorWithSigns(perp, s)) out.push_back(s);
  }
  return out;
}

std::vector<SignVector> DiagramVectors(const LeDiagram& d, int bound) {
  CheckScale(d.n() <= bound, "n = " + std::to_string(d.n()) +
                                 " exceeds the vector enumeration bound " +
                                 std::to_string(bound));
  const RationalMatrix a =
      CellRepresentative(d, RationalVector(d.NumPluses(), Rational(1)));
  std::vector<SignVector> closure =
      CompositionClosure(Circuits(Subspace::RowSpan(a)));
  if (closure.size() == 1 && closure[0].size() == 0) {
    closure = {SignVector(d.n())};  // No circuits: only the zero vector.
  }
  return closure;
}

bool InLFamilyViaCircuits(const LeDiagram& d) {
  const RationalMatrix a =
      CellRepresentative(d, RationalVector(d.NumPluses(), Rational(1)));
  const Matroid m(d.n(), d.k(), PlueckerOfRows(a).Support());
  const SubsetMask special = m.Loops() | m.Coloops();
  for (const SignVector& s : Circuits(Subspace::RowSpan(a))) {
    const int n = s.size();
    for (int b = 2; b < n; ++b) {
      if (s[b] != 0 || (special & Bit(b))) continue;
      bool left = false, right = false;
      for (int x = 1; x < b; ++x) left = left || s[x] != 0;
      for (int x = b + 1; x <= n; ++x) right = right || s[x] != 0;
      if (left && right) return false;
    }
  }
  return true;
}

}  // namespace amplikit
