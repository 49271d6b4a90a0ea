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

// Sign vectors in {-1, 0, +1}^n and the sign-variation statistics on them.
// Positions are 1-based in all public interfaces, matching the usual
// convention for the ground set [n].

#ifndef AMPLIKIT_SIGN_VECTOR_H_
#define AMPLIKIT_SIGN_VECTOR_H_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace amplikit {

class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(int n) : entries_(n, 0) {}
  explicit SignVector(std::vector<int8_t> entries);

  // Parses a string over the alphabet "+-0"; the leftmost symbol is index 1.
  static SignVector FromString(std::string_view s);

  int size() const { return static_cast<int>(entries_.size()); }
  // 1-based access.
  int operator[](int i) const { return entries_[i - 1]; }
  void Set(int i, int sign);

  bool IsZero() const;
  int NumZeros() const;
  SignVector Negated() const;
  std::string ToString() const;

  const std::vector<int8_t>& entries() const { return entries_; }

  friend bool operator==(const SignVector&, const SignVector&) = default;
  friend std::strong_ordering operator<=>(const SignVector& a,
                                          const SignVector& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<int8_t> entries_;
};

// Number of sign changes after deleting zeros; -1 for the zero vector.
int Var(const SignVector& v);

// Maximum of Var over all ways of replacing zeros by nonzero signs. Computed
// by a single left-to-right scan over the runs of zeros.
int VarBar(const SignVector& v);

// Multiplies entry i by (-1)^(i-1).
SignVector Alt(const SignVector& v);

// sigma <= tau iff sigma_i == tau_i wherever sigma_i != 0.
bool SignLeq(const SignVector& sigma, const SignVector& tau);

// The projective order: sigma <= tau or sigma <= -tau.
bool ProjectiveSignLeq(const SignVector& sigma, const SignVector& tau);

// (sigma o tau)_i = sigma_i if sigma_i != 0, else tau_i.
SignVector Compose(const SignVector& sigma, const SignVector& tau);

// True iff the first nonzero entry, at index i, equals (-1)^(i-1). This picks
// one representative from each pair {sigma, -sigma} of the sign sets below.
bool IsAltNormalized(const SignVector& v);

// Returns whichever of v, -v is alt-normalized. v must be nonzero.
SignVector AltNormalize(const SignVector& v);

// Sign{n,k,1} (closed == false): vectors in {+,-}^n with VarBar == k, first
// entry +. Closed Sign{n,k,1} (closed == true): nonzero vectors in
// {+,-,0}^n with VarBar == k, alt-normalized. Sorted ascending.
std::vector<SignVector> EnumerateSignSet(int n, int k, bool closed);

// All vectors in {-,0,+}^n, in ascending order.
std::vector<SignVector> AllSignVectors(int n);

}  // namespace amplikit

#endif  // AMPLIKIT_SIGN_VECTOR_H_
