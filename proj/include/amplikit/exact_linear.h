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

// Exact linear algebra over Q: matrices, subspaces in canonical form,
// Pluecker coordinates, total positivity tests and strict/weak linear
// feasibility via Fourier-Motzkin elimination.

#ifndef AMPLIKIT_EXACT_LINEAR_H_
#define AMPLIKIT_EXACT_LINEAR_H_

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "amplikit/sign_vector.h"

namespace amplikit {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

// p/q in lowest terms; q must be nonzero. Prefer this to Rational(p, q),
// which leaves the fraction unreduced.
Rational MakeRational(int64_t p, int64_t q);
Rational ParseRational(std::string_view text);
// Always "p/q", including q == 1.
std::string FormatRational(const Rational& q);

Rational Dot(const RationalVector& a, const RationalVector& b);
SignVector SignOf(const RationalVector& v);

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols);

  // All rows must have length cols. cols is needed when rows is empty.
  static RationalMatrix FromRows(const std::vector<RationalVector>& rows,
                                 int cols);
  static RationalMatrix FromRows(const std::vector<RationalVector>& rows);
  static RationalMatrix Identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int r, int c) { return data_[r * cols_ + c]; }
  const Rational& operator()(int r, int c) const {
    return data_[r * cols_ + c];
  }

  RationalVector Row(int r) const;
  RationalVector Column(int c) const;
  std::vector<RationalVector> RowVectors() const;
  RationalMatrix Transpose() const;
  // Submatrix on 0-based column indices, in the given order.
  RationalMatrix SelectColumns(const std::vector<int>& cols) const;

  friend bool operator==(const RationalMatrix&,
                         const RationalMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalVector operator*(const RationalMatrix& a, const RationalVector& x);

struct RowEchelonForm {
  RationalMatrix reduced;   // Nonzero rows only.
  std::vector<int> pivots;  // 0-based pivot column of each row.
};

RowEchelonForm ReducedRowEchelon(const RationalMatrix& a);
int Rank(const RationalMatrix& a);
Rational Determinant(const RationalMatrix& a);
// Minor on 0-based row and column index lists of equal length.
Rational Minor(const RationalMatrix& a, const std::vector<int>& rows,
               const std::vector<int>& cols);

// k-subsets of [n] are encoded as bitmasks, bit i-1 standing for element i.
using SubsetMask = uint32_t;

// k-subsets of [n] in lexicographic order of their sorted element lists.
std::vector<SubsetMask> KSubsets(int n, int k);
// Sorted 1-based elements of a mask.
std::vector<int> MaskElements(SubsetMask mask);
SubsetMask ElementsMask(const std::vector<int>& elements);
std::string FormatSubset(SubsetMask mask);

// A linear subspace of Q^n, stored by its reduced row echelon basis, so that
// equal subspaces have equal representations.
class Subspace {
 public:
  Subspace() = default;
  // The zero subspace of Q^ambient.
  explicit Subspace(int ambient);

  static Subspace RowSpan(const RationalMatrix& a);
  static Subspace Span(const std::vector<RationalVector>& vectors,
                       int ambient);

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const RationalMatrix& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  bool Contains(const RationalVector& v) const;
  bool IsSubspaceOf(const Subspace& other) const;
  Subspace OrthogonalComplement() const;
  // Image under the diagonal map x -> (f_1 x_1, ..., f_n x_n).
  Subspace ScaleCoordinates(const RationalVector& factors) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  int ambient_ = 0;
  RationalMatrix basis_;
  std::vector<int> pivots_;
};

// {x : a x = 0}.
Subspace Kernel(const RationalMatrix& a);
Subspace Intersect(const Subspace& a, const Subspace& b);
Subspace Sum(const Subspace& a, const Subspace& b);

// Maximal minors indexed by k-subsets; entries for every k-subset, including
// zeros.
class PluckerVector {
 public:
  PluckerVector() = default;
  PluckerVector(int n, int k) : n_(n), k_(k) {}

  int n() const { return n_; }
  int k() const { return k_; }
  const Rational& at(SubsetMask mask) const;
  void set(SubsetMask mask, const Rational& value) { coords_[mask] = value; }
  const std::map<SubsetMask, Rational>& coords() const { return coords_; }

  std::vector<SubsetMask> Support() const;
  // Equal up to a nonzero scalar.
  bool ProportionalTo(const PluckerVector& other) const;
  // Rescaled so that the first nonzero coordinate (lex order) is 1.
  PluckerVector Normalized() const;

 private:
  int n_ = 0;
  int k_ = 0;
  std::map<SubsetMask, Rational> coords_;
};

// Pluecker vector of the row span of a, as the maximal minors of a itself.
PluckerVector PlueckerOfRows(const RationalMatrix& a);
// Pluecker vector of a subspace, from its echelon basis (so the minor on the
// pivot columns is 1).
PluckerVector Pluecker(const Subspace& v);

// All r x r minors positive (maximal_only) or all minors of every size
// positive.
bool IsTotallyPositive(const RationalMatrix& a, bool maximal_only);
bool IsTotallyNonnegativeSubspace(const Subspace& v);
bool IsTotallyPositiveSubspace(const Subspace& v);

// d x n matrix with rows (t_1^j, ..., t_n^j), j = 0..d-1. Requires
// 0 < t_1 < ... < t_n.
RationalMatrix VandermondeMatrix(const RationalVector& t, int d);
// Column span of the n x d Vandermonde matrix, a point of Gr_{d,n}^{>0}.
Subspace VandermondeSubspace(const RationalVector& t, int d);

enum class Relation { kNegative, kZero, kPositive, kNonNegative, kNonPositive };

// coeffs . x + constant (relation) 0.
struct LinearConstraint {
  RationalVector coeffs;
  Rational constant = 0;
  Relation relation = Relation::kPositive;
};

// Decides whether the system has a rational solution in Q^dim and returns one.
// Equalities are removed by substitution, then Fourier-Motzkin eliminates one
// variable at a time with Chernikov's history bound to drop redundant rows.
std::optional<RationalVector> SignFeasible(
    const std::vector<LinearConstraint>& constraints, int dim);

// A vector of the subspace with the prescribed sign vector, if one exists.
std::optional<RationalVector> FindVectorWithSigns(const Subspace& v,
                                                  const SignVector& sigma);

}  // namespace amplikit

#endif  // AMPLIKIT_EXACT_LINEAR_H_
