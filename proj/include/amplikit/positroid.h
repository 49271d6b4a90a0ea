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

// Positroids of Le-diagrams, the interval-partition code of the closed m = 1
// positroid family, Grassmann necklaces, and the oriented-matroid circuits and
// vectors of totally nonnegative subspaces.

#ifndef AMPLIKIT_POSITROID_H_
#define AMPLIKIT_POSITROID_H_

#include <string>
#include <utility>
#include <vector>

#include "amplikit/exact_linear.h"
#include "amplikit/le_diagram.h"
#include "amplikit/matroid.h"
#include "amplikit/sign_vector.h"

namespace amplikit {

// Consecutive intervals E_1 < ... < E_{n-k} covering [n] and a set C of
// coloops. Valid when each E_j \ C is nonempty and max(E_j) is not in C
// unless max(E_j) == n.
struct IntervalPartitionCode {
  int n = 0;
  std::vector<std::pair<int, int>> intervals;  // Inclusive [lo, hi].
  SubsetMask coloops = 0;

  int k() const { return n - static_cast<int>(intervals.size()); }
  friend bool operator==(const IntervalPartitionCode&,
                         const IntervalPartitionCode&) = default;
};

void ValidateCode(const IntervalPartitionCode& code);
std::string FormatCode(const IntervalPartitionCode& code);

// Direct sum over blocks: elements of E_j in C are coloops, the rest of E_j
// carries the uniform matroid of rank |E_j \ C| - 1.
Matroid DecodeCode(const IntervalPartitionCode& code);

// Inverse of DecodeCode; throws if m is not of that form.
IntervalPartitionCode EncodeCode(const Matroid& m);

// All valid codes with n - k intervals.
std::vector<IntervalPartitionCode> AllCodes(int n, int k);

// sigma_1 = +, sigma_{i+1} = sigma_i iff i and i+1 lie in different blocks,
// then zero the entries in C.
SignVector CodeSignVector(const IntervalPartitionCode& code);

// The positroid of a Le-diagram: the support of the Pluecker vector of its
// cell representative.
Matroid PositroidOfDiagram(const LeDiagram& d);

// I_i is the lexicographically minimal basis for the order i < i+1 < ... < n
// < 1 < ... < i-1. Entry i-1 holds I_i.
std::vector<SubsetMask> GrassmannNecklace(const Matroid& m);

// Decorated permutation of a positroid read off its Grassmann necklace:
// pi(i) = j when I_{i+1} = I_i - i + j. Loops are black fixed points,
// coloops white ones.
DecoratedPermutation NecklacePermutation(const Matroid& m);

// Le-diagram of a positroid on [n].
LeDiagram PositroidToLe(const Matroid& m);

// Circuits of the oriented matroid whose covectors are the sign vectors of
// v and whose vectors are the sign vectors of v-perp. For a basis I of the
// column space of a matrix A spanning v-perp, the rows of A_I^{-1} A give
// circuits; both signs are returned. Sorted.
std::vector<SignVector> Circuits(const Subspace& v);

// Closure of circuits under composition, together with 0. Sorted.
std::vector<SignVector> CompositionClosure(const std::vector<SignVector>& circuits);

// Sign vectors of v-perp, by testing every sign pattern for feasibility.
// Exponential; intended as an oracle for small n.
std::vector<SignVector> BruteForceVectors(const Subspace& v);

// Vectors of the cell of d, from the circuits of its cell representative.
// Throws ScaleBoundExceeded when n > bound.
std::vector<SignVector> DiagramVectors(const LeDiagram& d, int bound = 8);

// No circuit sigma has a < b < c with sigma_a, sigma_c != 0, sigma_b == 0 and
// b neither a loop nor a coloop of the positroid.
bool InLFamilyViaCircuits(const LeDiagram& d);

}  // namespace amplikit

#endif  // AMPLIKIT_POSITROID_H_
