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

// The m = 1 amplituhedron: the maps f_Z and phi_W, the bijections between
// closed BCFW-like diagrams, sign vectors and positroids, membership tests,
// adjacency and boundary predicates, and images of arbitrary cells.
//
// Sign vectors of strata are always alt-normalized: the first nonzero entry
// at index i equals (-1)^(i-1).

#ifndef AMPLIKIT_AMPLITUHEDRON_H_
#define AMPLIKIT_AMPLITUHEDRON_H_

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "amplikit/arrangement.h"
#include "amplikit/exact_linear.h"
#include "amplikit/le_diagram.h"
#include "amplikit/matroid.h"
#include "amplikit/positroid.h"
#include "amplikit/sign_vector.h"

namespace amplikit {

// f_Z(X) = Z(X-perp), a k-dimensional subspace of Q^{k+m}. Requires X in
// the row span of z and dim X = m.
Subspace FZ(const RationalMatrix& z, const Subspace& x);
// The inverse: X = (Z^{-1}(Y))-perp.
Subspace FZInverse(const RationalMatrix& z, const Subspace& y);

// Delta_J(X) = det[y_1 | ... | y_k | z_{j_1} | ... | z_{j_m}] for every
// m-subset J, where y_1..y_k is the basis of y as stored.
PluckerVector PlueckerTranslate(const Subspace& y, const RationalMatrix& z);

// w in B_{n,k,1}(W): varbar(w) == k. Throws if w is zero or not in w_space.
bool MembershipBm1(const Subspace& w_space, const RationalVector& w, int k);

// The sequences ((-1)^{|I n [j]|} Delta_{I u j}(X))_{j not in I} for every
// (m-1)-subset I; entry i-1 holds the sequence for the i-th subset in
// KSubsets order.
std::vector<RationalVector> PlueckerSequences(const Subspace& x);
// X in G: every sequence that is not identically zero has var >= k.
bool MembershipG(const Subspace& x, int k);
// The same test on the Z side: the sequences
// (det[y_1 | ... | y_k | z_{i_1} | ... | z_{i_{m-1}} | z_j])_{j not in I}.
std::vector<RationalVector> ZSideSequences(const Subspace& y,
                                           const RationalMatrix& z);
bool MembershipF(const Subspace& y, const RationalMatrix& z);

// Closed diagrams (kDBar) <-> closed sign vectors. Forward: sigma_1 = +,
// sigma_{i+1} = sigma_i iff i labels a horizontal step, then the vertical
// labels of rows without a + are set to 0.
SignVector OmegaDS(const LeDiagram& d);
LeDiagram OmegaDSInverse(const SignVector& sigma, int k);

// Closed diagrams -> codes of closed positroids. Blocks end at the
// horizontal labels (the last one at n); C holds the vertical labels of rows
// without a +.
IntervalPartitionCode OmegaDMCode(const LeDiagram& d);
Matroid OmegaDM(const LeDiagram& d);
// sigma(M) for M a closed positroid of the m = 1 family.
SignVector SigmaOfMatroid(const Matroid& m);

// phi_W(V) = V-perp n W, returned as a spanning vector scaled so its sign
// vector is alt-normalized. Throws unless V is totally nonnegative and the
// intersection is a line.
RationalVector PhiW(const Subspace& w, const Subspace& v);
// The unique V in the closed family with phi_W(V) = span(w): V-perp is
// spanned by the restrictions of w to the blocks of the positroid of the
// stratum of w. Requires varbar(w) == k.
Subspace PhiWInverse(const RationalVector& w, int k);

// Conditions of the adjacency criterion for two maximal diagrams; each
// returns the common codimension-one boundary diagram or nothing.
std::optional<LeDiagram> AdjacentBySingleBox(const LeDiagram& d1,
                                             const LeDiagram& d2);
std::optional<LeDiagram> AdjacentBySignVectors(const LeDiagram& d1,
                                               const LeDiagram& d2);
std::optional<LeDiagram> AdjacentByPartitions(const LeDiagram& d1,
                                              const LeDiagram& d2);
std::optional<LeDiagram> AdjacentByPermutations(const LeDiagram& d1,
                                                const LeDiagram& d2);
// Geometric: the closures of the two regions of the arrangement meet in a
// bounded face of codimension one.
std::optional<LeDiagram> AdjacentGeometrically(const CyclicArrangement& a,
                                               const LeDiagram& d1,
                                               const LeDiagram& d2);

struct AdjacencyReport {
  std::optional<LeDiagram> by_box;
  std::optional<LeDiagram> by_signs;
  std::optional<LeDiagram> by_partitions;
  std::optional<LeDiagram> by_permutations;
  std::optional<std::optional<LeDiagram>> geometric;  // Set when computed.
  bool Consistent() const;
};

// Evaluates every condition; the geometric one only when a is given.
AdjacencyReport AdjacentMaximalCells(const LeDiagram& d1, const LeDiagram& d2,
                                     const CyclicArrangement* a = nullptr);

// Conditions of the boundary criterion for a closed diagram. True means the
// cell lies in the interior.
bool InteriorByRows(const LeDiagram& d);
bool InteriorBySignVector(const LeDiagram& d);
bool InteriorByCode(const LeDiagram& d);
bool InteriorByPermutation(const LeDiagram& d);
// Every region of the arrangement whose closure contains the face is bounded.
bool InteriorGeometrically(const CyclicArrangement& a, const LeDiagram& d);

struct BoundaryReport {
  bool by_rows = false;
  bool by_signs = false;
  bool by_code = false;
  bool by_permutation = false;
  std::optional<bool> geometric;
  bool Consistent() const;
  bool interior() const { return by_signs; }
};

BoundaryReport IsInteriorCell(const LeDiagram& d,
                              const CyclicArrangement* a = nullptr);

// The face of the arrangement labeled sigma or -sigma, whichever exists.
std::optional<SignVector> ArrangementLabel(const CyclicArrangement& a,
                                           const SignVector& sigma);

struct CellImage {
  std::vector<SignVector> strata;  // Alt-normalized, sorted.
  int dimension = 0;               // k minus the fewest zeros of a stratum.
  int plus_rows = 0;               // Rows of the diagram containing a +.
  bool injective = false;          // Membership in the closed L family.
  // For injective cells, the images under OmegaDS of Slide(D), sorted.
  std::vector<SignVector> slide_strata;
};

// Strata met by the image of the cell of d: the vectors of d with varbar k.
// Throws ScaleBoundExceeded when n > bound.
CellImage ImageOfCell(const LeDiagram& d, int bound = 8);

struct NoninjectivityCertificate {
  SignVector tau;      // A vector of the cell with varbar k and tau_b == 0.
  int b = 0;           // Neither a loop nor a coloop.
  Subspace v;          // V' in the cell.
  Subspace v_t;        // V'_t: column b of V' scaled by t.
  Rational t;
  RationalVector line;  // Spans phi_W(V') == phi_W(V'_t).
};

// Two distinct points of the cell of d with the same image under phi_W.
// Throws InvalidArgument when d is in the closed L family.
NoninjectivityCertificate NoninjectivityCertificateFor(
    const LeDiagram& d, const Subspace& w, std::mt19937_64& rng);
// Re-derives every claim of the certificate exactly.
bool VerifyCertificate(const LeDiagram& d, const Subspace& w,
                       const NoninjectivityCertificate& cert);

struct Stratum {
  SignVector label;
  int dimension = 0;
  LeDiagram diagram;
  IntervalPartitionCode code;
  RationalVector witness;  // A point of W with sign vector label.
};

class AmplituhedronModel {
 public:
  // Z is the (k+1) x n Vandermonde matrix with t_i = i.
  static AmplituhedronModel Default(int n, int k);
  // z must have positive maximal minors and k + 1 rows.
  static AmplituhedronModel FromMatrix(const RationalMatrix& z);

  int n() const { return z_.cols(); }
  int k() const { return z_.rows() - 1; }
  int m() const { return 1; }
  const RationalMatrix& z() const { return z_; }
  const Subspace& w() const { return w_; }
  const std::map<SignVector, Stratum>& strata() const { return strata_; }

  // The stratum containing span(w).
  const Stratum& StratumOf(const RationalVector& w) const;

 private:
  RationalMatrix z_;
  Subspace w_;
  std::map<SignVector, Stratum> strata_;
};

// Vandermonde points t_1 < ... < t_n drawn as increasing positive rationals.
RationalVector RandomVandermondeNodes(int n, std::mt19937_64& rng);
// A random rational combination of the basis of s, nonzero.
RationalVector RandomVectorIn(const Subspace& s, std::mt19937_64& rng);

}  // namespace amplikit

#endif  // AMPLIKIT_AMPLITUHEDRON_H_
