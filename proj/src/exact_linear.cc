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

#include "amplikit/exact_linear.h"

#include <algorithm>
#include <bit>
#include <cassert>
#include <functional>
#include <stdexcept>
#include <utility>

#include "amplikit/errors.h"

namespace amplikit {

Rational MakeRational(int64_t p, int64_t q) {
  CheckArgument(q != 0, "zero denominator");
  Rational r(mpz_class(std::to_string(p)), mpz_class(std::to_string(q)));
  r.canonicalize();
  return r;
}

Rational ParseRational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  CheckArgument(!s.empty(), "empty rational");
  Rational q;
  if (q.set_str(s, 10) != 0) throw InvalidArgument("bad rational '" + s + "'");
  CheckArgument(q.get_den() != 0, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string FormatRational(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational Dot(const RationalVector& a, const RationalVector& b) {
  CheckArgument(a.size() == b.size(), "dot product length mismatch");
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

SignVector SignOf(const RationalVector& v) {
  std::vector<int8_t> e(v.size());
  for (size_t i = 0; i < v.size(); ++i) e[i] = static_cast<int8_t>(sgn(v[i]));
  return SignVector(std::move(e));
}

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {
  CheckArgument(rows >= 0 && cols >= 0, "negative matrix dimension");
}

RationalMatrix RationalMatrix::FromRows(const std::vector<RationalVector>& rows,
                                        int cols) {
  RationalMatrix m(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows_; ++r) {
    CheckArgument(static_cast<int>(rows[r].size()) == cols,
                  "ragged matrix rows");
    for (int c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalMatrix RationalMatrix::FromRows(
    const std::vector<RationalVector>& rows) {
  CheckArgument(!rows.empty(), "matrix needs at least one row");
  return FromRows(rows, static_cast<int>(rows[0].size()));
}

RationalMatrix RationalMatrix::Identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalVector RationalMatrix::Row(int r) const {
  return RationalVector(data_.begin() + r * cols_,
                        data_.begin() + (r + 1) * cols_);
}

RationalVector RationalMatrix::Column(int c) const {
  RationalVector v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<RationalVector> RationalMatrix::RowVectors() const {
  std::vector<RationalVector> out;
  for (int r = 0; r < rows_; ++r) out.push_back(Row(r));
  return out;
}

RationalMatrix RationalMatrix::Transpose() const {
  RationalMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

RationalMatrix RationalMatrix::SelectColumns(const std::vector<int>& cols) const {
  RationalMatrix m(rows_, static_cast<int>(cols.size()));
  for (int r = 0; r < rows_; ++r) {
    for (size_t j = 0; j < cols.size(); ++j) m(r, j) = (*this)(r, cols[j]);
  }
  return m;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  CheckArgument(a.cols() == b.rows(), "matrix product shape mismatch");
  RationalMatrix p(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int l = 0; l < a.cols(); ++l) {
      if (a(i, l) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) p(i, j) += a(i, l) * b(l, j);
    }
  }
  return p;
}

RationalVector operator*(const RationalMatrix& a, const RationalVector& x) {
  CheckArgument(a.cols() == static_cast<int>(x.size()),
                "matrix-vector shape mismatch");
  RationalVector y(a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  }
  return y;
}

RowEchelonForm ReducedRowEchelon(const RationalMatrix& a) {
  RationalMatrix m = a;
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (int c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    }
    const Rational inv = 1 / m(row, col);
    for (int c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rational f = m(r, col);
      for (int c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  RationalMatrix reduced(row, m.cols());
  for (int r = 0; r < row; ++r) {
    for (int c = 0; c < m.cols(); ++c) reduced(r, c) = m(r, c);
  }
  return {std::move(reduced), std::move(pivots)};
}

int Rank(const RationalMatrix& a) { return ReducedRowEchelon(a).reduced.rows(); }

Rational Determinant(const RationalMatrix& a) {
  CheckArgument(a.rows() == a.cols(), "determinant of a non-square matrix");
  RationalMatrix m = a;
  const int n = m.rows();
  Rational det = 1;
  for (int col = 0; col < n; ++col) {
    int p = col;
    while (p < n && m(p, col) == 0) ++p;
    if (p == n) return 0;
    if (p != col) {
      for (int c = col; c < n; ++c) std::swap(m(p, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    for (int r = col + 1; r < n; ++r) {
      if (m(r, col) == 0) continue;
      const Rational f = m(r, col) / m(col, col);
      for (int c = col; c < n; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

Rational Minor(const RationalMatrix& a, const std::vector<int>& rows,
               const std::vector<int>& cols) {
  CheckArgument(rows.size() == cols.size(), "minor must be square");
  const int s = static_cast<int>(rows.size());
  RationalMatrix m(s, s);
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) m(i, j) = a(rows[i], cols[j]);
  }
  return Determinant(m);
}

std::vector<SubsetMask> KSubsets(int n, int k) {
  CheckArgument(n >= 0 && n <= 31, "ground set size out of range");
  std::vector<SubsetMask> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    SubsetMask m = 0;
    for (int i : idx) m |= SubsetMask{1} << i;
    out.push_back(m);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::vector<int> MaskElements(SubsetMask mask) {
  std::vector<int> out;
  for (int i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1) out.push_back(i + 1);
  }
  return out;
}

SubsetMask ElementsMask(const std::vector<int>& elements) {
  SubsetMask m = 0;
  for (int e : elements) {
    CheckArgument(e >= 1 && e <= 32, "element out of range");
    m |= SubsetMask{1} << (e - 1);
  }
  return m;
}

std::string FormatSubset(SubsetMask mask) {
  std::string s = "{";
  bool first = true;
  for (int e : MaskElements(mask)) {
    if (!first) s += ",";
    s += std::to_string(e);
    first = false;
  }
  return s + "}";
}

Subspace::Subspace(int ambient) : ambient_(ambient), basis_(0, ambient) {}

Subspace Subspace::RowSpan(const RationalMatrix& a) {
  Subspace s;
  s.ambient_ = a.cols();
  RowEchelonForm ref = ReducedRowEchelon(a);
  s.basis_ = std::move(ref.reduced);
  s.pivots_ = std::move(ref.pivots);
  return s;
}

Subspace Subspace::Span(const std::vector<RationalVector>& vectors,
                        int ambient) {
  return RowSpan(RationalMatrix::FromRows(vectors, ambient));
}

bool Subspace::Contains(const RationalVector& v) const {
  CheckArgument(static_cast<int>(v.size()) == ambient_, "ambient mismatch");
  // Eliminate against the echelon basis; v is in the span iff nothing is left.
  RationalVector r = v;
  for (int i = 0; i < dim(); ++i) {
    const Rational f = r[pivots_[i]];
    if (f == 0) continue;
    for (int c = 0; c < ambient_; ++c) r[c] -= f * basis_(i, c);
  }
  return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; });
}

bool Subspace::IsSubspaceOf(const Subspace& other) const {
  for (int i = 0; i < dim(); ++i) {
    if (!other.Contains(basis_.Row(i))) return false;
  }
  return true;
}

Subspace Subspace::OrthogonalComplement() const { return Kernel(basis_); }

Subspace Subspace::ScaleCoordinates(const RationalVector& factors) const {
  CheckArgument(static_cast<int>(factors.size()) == ambient_,
                "ambient mismatch");
  RationalMatrix m = basis_;
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) m(r, c) *= factors[c];
  }
  return RowSpan(m);
}

Subspace Kernel(const RationalMatrix& a) {
  RowEchelonForm ref = ReducedRowEchelon(a);
  const int n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (int p : ref.pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(n);
    v[f] = 1;
    for (size_t i = 0; i < ref.pivots.size(); ++i) {
      v[ref.pivots[i]] = -ref.reduced(static_cast<int>(i), f);
    }
    basis.push_back(std::move(v));
  }
  return Subspace::Span(basis, n);
}

Subspace Sum(const Subspace& a, const Subspace& b) {
  CheckArgument(a.ambient() == b.ambient(), "ambient mismatch");
  std::vector<RationalVector> rows = a.basis().RowVectors();
  for (RationalVector& r : b.basis().RowVectors()) rows.push_back(std::move(r));
  return Subspace::Span(rows, a.ambient());
}

Subspace Intersect(const Subspace& a, const Subspace& b) {
  CheckArgument(a.ambient() == b.ambient(), "ambient mismatch");
  return Sum(a.OrthogonalComplement(), b.OrthogonalComplement())
      .OrthogonalComplement();
}

const Rational& PluckerVector::at(SubsetMask mask) const {
  auto it = coords_.find(mask);
  if (it == coords_.end()) {
    throw InvalidArgument("no Pluecker coordinate for " + FormatSubset(mask));
  }
  return it->second;
}

std::vector<SubsetMask> PluckerVector::Support() const {
  std::vector<SubsetMask> out;
  for (SubsetMask m : KSubsets(n_, k_)) {
    auto it = coords_.find(m);
    if (it != coords_.end() && it->second != 0) out.push_back(m);
  }
  return out;
}

PluckerVector PluckerVector::Normalized() const {
  PluckerVector out(n_, k_);
  Rational scale = 0;
  for (SubsetMask m : KSubsets(n_, k_)) {
    const Rational& x = at(m);
    if (scale == 0 && x != 0) scale = 1 / x;
  }
  for (const auto& [m, x] : coords_) out.set(m, x * scale);
  return out;
}

bool PluckerVector::ProportionalTo(const PluckerVector& other) const {
  if (n_ != other.n_ || k_ != other.k_) return false;
  PluckerVector a = Normalized();
  PluckerVector b = other.Normalized();
  for (SubsetMask m : KSubsets(n_, k_)) {
    if (a.at(m) != b.at(m)) return false;
  }
  return true;
}

PluckerVector PlueckerOfRows(const RationalMatrix& a) {
  const int k = a.rows();
  const int n = a.cols();
  PluckerVector p(n, k);
  std::vector<int> rows(k);
  for (int i = 0; i < k; ++i) rows[i] = i;
  for (SubsetMask m : KSubsets(n, k)) {
    std::vector<int> cols;
    for (int e : MaskElements(m)) cols.push_back(e - 1);
    p.set(m, Minor(a, rows, cols));
  }
  return p;
}

PluckerVector Pluecker(const Subspace& v) { return PlueckerOfRows(v.basis()); }

bool IsTotallyPositive(const RationalMatrix& a, bool maximal_only) {
  const int r = a.rows();
  const int c = a.cols();
  const int lo = maximal_only ? std::min(r, c) : 1;
  for (int s = lo; s <= std::min(r, c); ++s) {
    for (SubsetMask rm : KSubsets(r, s)) {
      std::vector<int> rows;
      for (int e : MaskElements(rm)) rows.push_back(e - 1);
      for (SubsetMask cm : KSubsets(c, s)) {
        std::vector<int> cols;
        for (int e : MaskElements(cm)) cols.push_back(e - 1);
        if (Minor(a, rows, cols) <= 0) return false;
      }
    }
  }
  return true;
}

bool IsTotallyNonnegativeSubspace(const Subspace& v) {
  // The echelon basis has minor 1 on its pivots, so the canonical Pluecker
  // vector has a positive entry and the test is sign-unambiguous.
  const PluckerVector p = Pluecker(v);
  for (const auto& [m, x] : p.coords()) {
    if (x < 0) return false;
  }
  return true;
}

bool IsTotallyPositiveSubspace(const Subspace& v) {
  const PluckerVector p = Pluecker(v);
  for (const auto& [m, x] : p.coords()) {
    if (x <= 0) return false;
  }
  return true;
}

RationalMatrix VandermondeMatrix(const RationalVector& t, int d) {
  const int n = static_cast<int>(t.size());
  CheckArgument(n >= 1 && d >= 1 && d <= n, "need 1 <= d <= n");
  CheckArgument(t[0] > 0, "Vandermonde nodes must be positive");
  for (int i = 1; i < n; ++i) {
    CheckArgument(t[i - 1] < t[i], "Vandermonde nodes must increase strictly");
  }
  RationalMatrix m(d, n);
  for (int i = 0; i < n; ++i) {
    Rational p = 1;
    for (int j = 0; j < d; ++j) {
      m(j, i) = p;
      p *= t[i];
    }
  }
  return m;
}

Subspace VandermondeSubspace(const RationalVector& t, int d) {
  return Subspace::RowSpan(VandermondeMatrix(t, d));
}

namespace {

// a . x + c > 0 (strict) or >= 0.
struct Inequality {
  RationalVector a;
  Rational c;
  bool strict;
  uint64_t history;
};

bool AllZero(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

bool Satisfied(const Inequality& q) { return q.strict ? q.c > 0 : q.c >= 0; }

// Scales so that the first nonzero coefficient is +-1 and drops duplicates,
// keeping a strict copy over a weak one.
void Deduplicate(std::vector<Inequality>& system) {
  for (Inequality& q : system) {
    for (const Rational& x : q.a) {
      if (x == 0) continue;
      const Rational s = 1 / abs(x);
      for (Rational& y : q.a) y *= s;
      q.c *= s;
      break;
    }
  }
  std::vector<Inequality> out;
  for (Inequality& q : system) {
    bool merged = false;
    for (Inequality& p : out) {
      if (p.a == q.a && p.c == q.c) {
        if (q.strict && !p.strict) p = q;
        merged = true;
        break;
      }
    }
    if (!merged) out.push_back(std::move(q));
  }
  system = std::move(out);
}

bool PassesChernikov(uint64_t history, int eliminated, bool tracking) {
  return !tracking || std::popcount(history) <= eliminated + 1;
}

}  // namespace

std::optional<RationalVector> SignFeasible(
    const std::vector<LinearConstraint>& constraints, int dim) {
  CheckArgument(dim >= 0, "negative dimension");
  std::vector<std::pair<RationalVector, Rational>> equalities;
  std::vector<Inequality> system;
  for (const LinearConstraint& lc : constraints) {
    CheckArgument(static_cast<int>(lc.coeffs.size()) == dim,
                  "constraint dimension mismatch");
    RationalVector neg(dim);
    for (int i = 0; i < dim; ++i) neg[i] = -lc.coeffs[i];
    switch (lc.relation) {
      case Relation::kZero:
        equalities.emplace_back(lc.coeffs, lc.constant);
        break;
      case Relation::kPositive:
        system.push_back({lc.coeffs, lc.constant, true, 0});
        break;
      case Relation::kNonNegative:
        system.push_back({lc.coeffs, lc.constant, false, 0});
        break;
      case Relation::kNegative:
        system.push_back({neg, -lc.constant, true, 0});
        break;
      case Relation::kNonPositive:
        system.push_back({neg, -lc.constant, false, 0});
        break;
    }
  }

  // Substitute out equalities: x_v = b . x + d.
  struct Substitution {
    int var;
    RationalVector b;
    Rational d;
  };
  std::vector<Substitution> subs;
  for (size_t e = 0; e < equalities.size(); ++e) {
    const auto& [a, c] = equalities[e];
    int v = -1;
    for (int i = 0; i < dim; ++i) {
      if (a[i] != 0) {
        v = i;
        break;
      }
    }
    if (v < 0) {
      if (c != 0) return std::nullopt;
      continue;
    }
    Substitution s{v, RationalVector(dim), -c / a[v]};
    for (int i = 0; i < dim; ++i) {
      if (i != v) s.b[i] = -a[i] / a[v];
    }
    auto apply = [&](RationalVector& coeffs, Rational& constant) {
      const Rational f = coeffs[v];
      if (f == 0) return;
      for (int i = 0; i < dim; ++i) coeffs[i] += f * s.b[i];
      coeffs[v] = 0;
      constant += f * s.d;
    };
    for (size_t f = e + 1; f < equalities.size(); ++f) {
      apply(equalities[f].first, equalities[f].second);
    }
    for (Inequality& q : system) apply(q.a, q.c);
    subs.push_back(std::move(s));
  }

  const bool tracking = system.size() <= 64;
  for (size_t i = 0; i < system.size() && tracking; ++i) {
    system[i].history = uint64_t{1} << i;
  }

  // levels[j] involves variables 0 .. dim-1-j.
  std::vector<std::vector<Inequality>> levels;
  {
    std::vector<Inequality> start;
    for (Inequality& q : system) {
      if (AllZero(q.a)) {
        if (!Satisfied(q)) return std::nullopt;
      } else {
        start.push_back(std::move(q));
      }
    }
    Deduplicate(start);
    levels.push_back(std::move(start));
  }
  for (int j = 0; j < dim; ++j) {
    const int var = dim - 1 - j;
    const std::vector<Inequality>& cur = levels.back();
    std::vector<Inequality> next;
    std::vector<const Inequality*> lower, upper;
    for (const Inequality& q : cur) {
      if (q.a[var] > 0) {
        lower.push_back(&q);
      } else if (q.a[var] < 0) {
        upper.push_back(&q);
      } else {
        next.push_back(q);
      }
    }
    for (const Inequality* p : lower) {
      for (const Inequality* q : upper) {
        const uint64_t history = p->history | q->history;
        if (!PassesChernikov(history, j + 1, tracking)) continue;
        // (-q_var) * p + p_var * q cancels var.
        const Rational sp = -q->a[var];
        const Rational sq = p->a[var];
        Inequality r{RationalVector(dim), sp * p->c + sq * q->c,
                     p->strict || q->strict, history};
        for (int i = 0; i < dim; ++i) r.a[i] = sp * p->a[i] + sq * q->a[i];
        r.a[var] = 0;
        if (AllZero(r.a)) {
          if (!Satisfied(r)) return std::nullopt;
          continue;
        }
        next.push_back(std::move(r));
      }
    }
    Deduplicate(next);
    levels.push_back(std::move(next));
  }

  RationalVector x(dim);
  for (int var = 0; var < dim; ++var) {
    const std::vector<Inequality>& sys = levels[dim - 1 - var];
    std::optional<Rational> lo, hi;
    bool lo_strict = false, hi_strict = false;
    for (const Inequality& q : sys) {
      if (q.a[var] == 0) continue;
      Rational rest = q.c;
      for (int i = 0; i < var; ++i) rest += q.a[i] * x[i];
      const Rational bound = -rest / q.a[var];
      if (q.a[var] > 0) {
        if (!lo || bound > *lo || (bound == *lo && q.strict)) {
          lo_strict = (lo && bound == *lo) ? (lo_strict || q.strict) : q.strict;
          lo = bound;
        }
      } else {
        if (!hi || bound < *hi || (bound == *hi && q.strict)) {
          hi_strict = (hi && bound == *hi) ? (hi_strict || q.strict) : q.strict;
          hi = bound;
        }
      }
    }
    if (lo && hi) {
      if (*lo < *hi) {
        x[var] = (*lo + *hi) / 2;
      } else {
        if (*lo != *hi || lo_strict || hi_strict) {
          throw std::logic_error("Fourier-Motzkin back-substitution failed");
        }
        x[var] = *lo;
      }
    } else if (lo) {
      x[var] = lo_strict ? *lo + 1 : *lo;
    } else if (hi) {
      x[var] = hi_strict ? *hi - 1 : *hi;
    } else {
      x[var] = 0;
    }
  }
  for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
    x[it->var] = Dot(it->b, x) + it->d;
  }

  for (const LinearConstraint& lc : constraints) {
    const int s = sgn(Dot(lc.coeffs, x) + lc.constant);
    bool ok = false;
    switch (lc.relation) {
      case Relation::kZero:
        ok = s == 0;
        break;
      case Relation::kPositive:
        ok = s > 0;
        break;
      case Relation::kNegative:
        ok = s < 0;
        break;
      case Relation::kNonNegative:
        ok = s >= 0;
        break;
      case Relation::kNonPositive:
        ok = s <= 0;
        break;
    }
    if (!ok) throw std::logic_error("Fourier-Motzkin witness check failed");
  }
  return x;
}

std::optional<RationalVector> FindVectorWithSigns(const Subspace& v,
                                                  const SignVector& sigma) {
  CheckArgument(sigma.size() == v.ambient(), "sign vector length mismatch");
  const int d = v.dim();
  std::vector<LinearConstraint> cs;
  for (int i = 0; i < v.ambient(); ++i) {
    LinearConstraint lc;
    lc.coeffs = v.basis().Column(i);
    lc.relation = sigma[i + 1] > 0   ? Relation::kPositive
                  : sigma[i + 1] < 0 ? Relation::kNegative
                                     : Relation::kZero;
    cs.push_back(std::move(lc));
  }
  std::optional<RationalVector> c = SignFeasible(cs, d);
  if (!c) return std::nullopt;
  RationalVector out(v.ambient());
  for (int r = 0; r < d; ++r) {
    for (int i = 0; i < v.ambient(); ++i) out[i] += (*c)[r] * v.basis()(r, i);
  }
  return out;
}

}  // namespace amplikit
