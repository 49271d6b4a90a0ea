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

// The four families of Le-diagrams relevant to the m = 1 amplituhedron, the
// BCFW-like cells, the Slide operation and the cover relations of the closed
// family.
//
//   kD     exactly one + per row, at the right end of the row.
//   kDBar  at most one + per row, at the right end.
//   kLBar  at most one + per row, and no 0 has a + above it and a + to its
//          right.
//   kL     kLBar with exactly k pluses.

#ifndef AMPLIKIT_DIAGRAM_FAMILIES_H_
#define AMPLIKIT_DIAGRAM_FAMILIES_H_

#include <string>
#include <vector>

#include "amplikit/le_diagram.h"

namespace amplikit {

enum class DiagramFamily { kD, kDBar, kL, kLBar };

std::string FamilyName(DiagramFamily family);
bool InFamily(const LeDiagram& d, DiagramFamily family);

// Sorted members of a family of type (k, n).
std::vector<LeDiagram> EnumerateFamily(int n, int k, DiagramFamily family);

// BCFW-like cells, generated by the recursion that either appends a black
// lollipop at n or extends the last block of a composition of [n] into
// intervals. Each block [a, b] contributes the cycle (b, b-1, ..., a); the
// diagram is then read off with PermutationToLe. Sorted.
std::vector<LeDiagram> BcfwCells(int n, int k);

// The permutation of a composition of [n] into consecutive intervals, given
// by their right endpoints (the last one is n).
DecoratedPermutation IntervalCyclePermutation(int n,
                                              const std::vector<int>& ends);

// Slide(D) for D in kLBar. All-zero rows are first deleted; then each +
// slides weakly right to a box whose southeast corner is on the border of
// the reduced diagram, the boxes right of it in that row are cut, and if it
// moved and its whole lower edge lies on that border, the box may be cut as
// well. The deleted rows are put back as all-zero rows on their original
// border labels. Sorted, duplicate free.
std::vector<LeDiagram> Slide(const LeDiagram& d);

// Diagrams covered by d in the closed family (d in kDBar): cut a + with no +
// below it together with the boxes below it in its column, or turn a + into
// a 0.
std::vector<LeDiagram> CoverRelations(const LeDiagram& d);

// Transitive closure of CoverRelations, including d itself. Sorted.
std::vector<LeDiagram> DownSet(const LeDiagram& d);

}  // namespace amplikit

#endif  // AMPLIKIT_DIAGRAM_FAMILIES_H_
