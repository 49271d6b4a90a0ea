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

// Cyclic hyperplane arrangements: n affine hyperplanes in R^k whose normals
// span a totally positive k-plane, their faces labeled by sign vectors, and
// the bounded complex.

#ifndef AMPLIKIT_ARRANGEMENT_H_
#define AMPLIKIT_ARRANGEMENT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "amplikit/exact_linear.h"
#include "amplikit/sign_vector.h"

namespace amplikit {

// The projection u of w onto V-perp along V (so w - u lies in V).
RationalVector OrientationVector(const Subspace& v, const RationalVector& w);
// Sign of u_1. Throws unless var(u) == varbar(u) == dim V, which forces
// u_1 != 0.
int OrientationSign(const Subspace& v, const RationalVector& w);

// Hyperplane i is { x in R^k : w_1[i] x_1 + ... + w_k[i] x_k + w_0[i] = 0 }.
class CyclicArrangement {
 public:
  // basis = (w_0, w_1, ..., w_k), each of length n. Requires span(w_1..w_k)
  // totally positive and the hyperplanes generic; unless relaxed, also
  // span(w_0..w_k) totally positive, and w_0 is negated if needed so that the
  // orientation sign is +1.
  static CyclicArrangement Build(const std::vector<RationalVector>& basis,
                                 bool relaxed = false);

  int n() const { return static_cast<int>(w0_.size()); }
  int k() const { return static_cast<int>(normals_.size()); }
  const RationalVector& w0() const { return w0_; }
  const std::vector<RationalVector>& normals() const { return normals_; }
  bool negated_w0() const { return negated_w0_; }
  // The u of OrientationVector(span(w_1..w_k), w_0), after any negation.
  const RationalVector& orientation_vector() const { return u_; }

  // Coefficients (w_1[i], ..., w_k[i]) of hyperplane i (1-based).
  RationalVector Normal(int i) const;
  // Psi(x) = w_0 + sum_j x_j w_j; its sign vector labels the face of x.
  RationalVector Evaluate(const RationalVector& x) const;
  // "a1*x1 + a2*x2 = c" with c = -w_0[i]; zero terms are dropped.
  std::string HyperplaneString(int i) const;

 private:
  RationalVector w0_;
  std::vector<RationalVector> normals_;
  RationalVector u_;
  bool negated_w0_ = false;
};

// Convenience: w_0 = (1, ..., 1) and w_j = (t_1^j, ..., t_n^j).
CyclicArrangement VandermondeArrangement(const RationalVector& t, int k);

struct Face {
  SignVector label;
  int dim = 0;
  bool bounded = false;
  RationalVector witness;  // A point of the face.
};

// A point of the face with the given sign vector, if the face is nonempty.
std::optional<RationalVector> FaceWitness(const CyclicArrangement& a,
                                          const SignVector& sigma);
// True iff the face (assumed nonempty) has no nonzero recession direction.
bool IsBoundedFace(const CyclicArrangement& a, const SignVector& sigma);

// All nonempty faces, sorted by label. The default skips labels with
// varbar > k or more than k zeros, which can never be faces; full_sweep
// tests all 3^n labels.
std::vector<Face> EnumerateFaces(const CyclicArrangement& a,
                                 bool full_sweep = false);

// Number of faces of each dimension 0..k.
std::vector<int64_t> FVector(const std::vector<Face>& faces, int k,
                             bool bounded_only);

// Coefficients of sum_i C(n-k-1+i, i) C(n, k-i) q^i, cross-checked against
// sum_j C(n-k-1+j, j) (1+q)^j.
std::vector<int64_t> FPolynomial(int n, int k);
// Descending powers with superscript exponents, e.g. "6q²+15q+10".
std::string FormatPolynomial(const std::vector<int64_t>& coeffs);
int64_t EvaluatePolynomial(const std::vector<int64_t>& coeffs, int64_t q);

std::string FacesToCsv(const std::vector<Face>& faces);
// Picture of a k = 2 arrangement with its bounded regions labeled.
std::string ArrangementSvg(const CyclicArrangement& a,
                           const std::vector<Face>& faces);

}  // namespace amplikit

#endif  // AMPLIKIT_ARRANGEMENT_H_
