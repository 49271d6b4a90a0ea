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

#ifndef AMPLIKIT_MATROID_H_
#define AMPLIKIT_MATROID_H_

#include <string>
#include <vector>

#include "amplikit/exact_linear.h"

namespace amplikit {

// A matroid given by its bases, on a ground set of elements in [1, 32]
// encoded as a bitmask.
class Matroid {
 public:
  Matroid() = default;
  // Ground set [n].
  Matroid(int n, int rank, std::vector<SubsetMask> bases);
  Matroid(SubsetMask ground, int rank, std::vector<SubsetMask> bases);

  static Matroid Uniform(SubsetMask ground, int rank);

  SubsetMask ground() const { return ground_; }
  int size() const;
  int rank() const { return rank_; }
  // Sorted ascending.
  const std::vector<SubsetMask>& bases() const { return bases_; }

  bool IsBasis(SubsetMask set) const;
  // Elements in no basis.
  SubsetMask Loops() const;
  // Elements in every basis.
  SubsetMask Coloops() const;

  Matroid Dual() const;
  // Inclusion-maximal sets among {B & f}.
  Matroid Restriction(SubsetMask f) const;
  // Classes of the relation "B - x + y is a basis for some basis B", sorted by
  // smallest element.
  std::vector<SubsetMask> ConnectedComponents() const;

  std::string ToString() const;

  friend bool operator==(const Matroid&, const Matroid&) = default;

 private:
  void Validate();

  SubsetMask ground_ = 0;
  int rank_ = 0;
  std::vector<SubsetMask> bases_;
};

bool SatisfiesBasisExchange(const std::vector<SubsetMask>& bases);

// Ground sets must be disjoint.
Matroid DirectSum(const Matroid& a, const Matroid& b);

// lower <= upper in the weak order: every basis of lower is a basis of upper.
// Ground sets and ranks must agree.
bool WeakLeq(const Matroid& lower, const Matroid& upper);

}  // namespace amplikit

#endif  // AMPLIKIT_MATROID_H_
