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

#include "amplikit/amplituhedron.h"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "amplikit/diagram_families.h"
#include "amplikit/errors.h"
#include "amplikit/plabic_graph.h"

namespace amplikit {

namespace {

SubsetMask Bit(int e) { return SubsetMask{1} << (e - 1); }

Rational RandomRational(std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> num(lo, hi);
  std::uniform_int_distribution<int> den(1, 9);
  const int p = num(rng);
  return MakeRational(p, den(rng));
}

// det[y_1 | ... | y_k | extra columns of z].
Rational BorderedDeterminant(const Subspace& y, const RationalMatrix& z,
                             const std::vector<int>& columns) {
  const int d = z.rows();
  RationalMatrix m(d, d);
  for (int r = 0; r < d; ++r) {
    for (int i = 0; i < y.dim(); ++i) m(r, i) = y.basis()(i, r);
    for (size_t j = 0; j < columns.size(); ++j) {
      m(r, y.dim() + static_cast<int>(j)) = z(r, columns[j] - 1);
    }
  }
  return Determinant(m);
}

bool SequenceOk(const RationalVector& seq, int k) {
  const SignVector s = SignOf(seq);
  return s.IsZero() || Var(s) >= k;
}

void CheckMaximal(const LeDiagram& d) {
  CheckArgument(InFamily(d, DiagramFamily::kD),
                "adjacency is defined for maximal diagrams " + d.ToString());
}

int Inversions(const std::vector<int>& images) {
  int count = 0;
  for (size_t i = 0; i < images.size(); ++i) {
    for (size_t j = i + 1; j < images.size(); ++j) {
      count += images[i] > images[j];
    }
  }
  return count;
}

// Block index of every element 1..n (entry 0 unused).
std::vector<int> BlockIndex(const IntervalPartitionCode& code) {
  std::vector<int> block(code.n + 1, -1);
  for (size_t j = 0; j < code.intervals.size(); ++j) {
    for (int e = code.intervals[j].first; e <= code.intervals[j].second; ++e) {
      block[e] = static_cast<int>(j);
    }
  }
  return block;
}

bool Proportional(const RationalVector& a, const RationalVector& b) {
  return Rank(RationalMatrix::FromRows({a, b})) == 1;
}

}  // namespace

Subspace FZ(const RationalMatrix& z, const Subspace& x) {
  const int n = z.cols();
  CheckArgument(x.ambient() == n, "X must live in Q^n");
  CheckArgument(x.IsSubspaceOf(Subspace::RowSpan(z)), "X is not inside W");
  const int m = x.dim();
  const int k = z.rows() - m;
  CheckArgument(m >= 1 && k >= 0, "need 1 <= dim X <= k + m");
  std::vector<RationalVector> images;
  const Subspace perp = x.OrthogonalComplement();
  for (int i = 0; i < perp.dim(); ++i) images.push_back(z * perp.basis().Row(i));
  Subspace y = Subspace::Span(images, z.rows());
  CheckArgument(y.dim() == k, "Z(X-perp) has the wrong dimension");
  return y;
}

Subspace FZInverse(const RationalMatrix& z, const Subspace& y) {
  CheckArgument(y.ambient() == z.rows(), "Y must live in Q^{k+m}");
  const Subspace y_perp = y.OrthogonalComplement();
  const RationalMatrix bz = y_perp.basis() * z;
  Subspace x = Subspace::RowSpan(bz);
  CheckArgument(x.dim() == y_perp.dim(), "Z does not have full rank");
  return x;
}

PluckerVector PlueckerTranslate(const Subspace& y, const RationalMatrix& z) {
  const int n = z.cols();
  const int m = z.rows() - y.dim();
  CheckArgument(m >= 1, "need m >= 1");
  CheckArgument(y.ambient() == z.rows(), "Y must live in Q^{k+m}");
  PluckerVector out(n, m);
  for (SubsetMask j : KSubsets(n, m)) {
    out.set(j, BorderedDeterminant(y, z, MaskElements(j)));
  }
  return out;
}

bool MembershipBm1(const Subspace& w_space, const RationalVector& w, int k) {
  CheckArgument(w_space.Contains(w), "w is not in W");
  const SignVector s = SignOf(w);
  CheckArgument(!s.IsZero(), "w must be nonzero");
  return VarBar(s) == k;
}

std::vector<RationalVector> PlueckerSequences(const Subspace& x) {
  const int n = x.ambient();
  const int m = x.dim();
  CheckArgument(m >= 1, "need dim X >= 1");
  const PluckerVector p = Pluecker(x);
  std::vector<RationalVector> out;
  for (SubsetMask i_set : KSubsets(n, m - 1)) {
    RationalVector seq;
    for (int j = 1; j <= n; ++j) {
      if (i_set & Bit(j)) continue;
      const int below = std::popcount(i_set & (Bit(j + 1) - 1));
      const Rational& delta = p.at(i_set | Bit(j));
      seq.push_back(below % 2 ? Rational(-delta) : delta);
    }
    out.push_back(std::move(seq));
  }
  return out;
}

bool MembershipG(const Subspace& x, int k) {
  for (const RationalVector& seq : PlueckerSequences(x)) {
    if (!SequenceOk(seq, k)) return false;
  }
  return true;
}

std::vector<RationalVector> ZSideSequences(const Subspace& y,
                                           const RationalMatrix& z) {
  const int n = z.cols();
  const int m = z.rows() - y.dim();
  CheckArgument(m >= 1, "need m >= 1");
  std::vector<RationalVector> out;
  for (SubsetMask i_set : KSubsets(n, m - 1)) {
    const std::vector<int> base = MaskElements(i_set);
    RationalVector seq;
    for (int j = 1; j <= n; ++j) {
      if (i_set & Bit(j)) continue;
      std::vector<int> cols = base;
      cols.push_back(j);
      seq.push_back(BorderedDeterminant(y, z, cols));
    }
    out.push_back(std::move(seq));
  }
  return out;
}

bool MembershipF(const Subspace& y, const RationalMatrix& z) {
  for (const RationalVector& seq : ZSideSequences(y, z)) {
    if (!SequenceOk(seq, y.dim())) return false;
  }
  return true;
}

SignVector OmegaDS(const LeDiagram& d) {
  CheckArgument(InFamily(d, DiagramFamily::kDBar),
                "OmegaDS needs a closed BCFW-like diagram, got " + d.ToString());
  SignVector sigma(d.n());
  int s = 1;
  sigma.Set(1, s);
  for (int i = 1; i < d.n(); ++i) {
    if (d.ColumnOfLabel(i) == 0) s = -s;
    sigma.Set(i + 1, s);
  }
  for (int r = 1; r <= d.k(); ++r) {
    if (!d.RowHasPlus(r)) sigma.Set(d.VerticalLabel(r), 0);
  }
  return sigma;
}

LeDiagram OmegaDSInverse(const SignVector& sigma, int k) {
  const int n = sigma.size();
  CheckArgument(n >= 1 && k >= 0 && k <= n - 1, "need 0 <= k <= n-1");
  CheckArgument(!sigma.IsZero() && IsAltNormalized(sigma) &&
                    VarBar(sigma) == k,
                sigma.ToString() + " is not in the closed sign set for k = " +
                    std::to_string(k));
  // Rebuild the unzeroed vector from the right; a zero always sits on a
  // vertical step, so it differs from its right neighbor.
  std::vector<int> tau(n + 1);
  tau[n] = sigma[n] != 0 ? sigma[n] : (k % 2 == 1 ? 1 : -1);
  for (int i = n - 1; i >= 1; --i) tau[i] = sigma[i] != 0 ? sigma[i] : -tau[i + 1];
  std::vector<int> vertical;
  for (int i = 1; i < n; ++i) {
    if (tau[i] != tau[i + 1]) vertical.push_back(i);
  }
  if (static_cast<int>(vertical.size()) == k - 1) vertical.push_back(n);
  CheckArgument(tau[1] == 1 && static_cast<int>(vertical.size()) == k &&
                    (sigma[n] != 0 || vertical.back() == n),
                sigma.ToString() + " does not come from a diagram");
  std::vector<std::string> rows;
  for (int v : vertical) {
    int length = 0;
    for (int h = v + 1; h <= n; ++h) {
      length += !std::binary_search(vertical.begin(), vertical.end(), h);
    }
    std::string row(length, '0');
    if (sigma[v] != 0) {
      CheckArgument(length > 0, sigma.ToString() + " needs a + in an empty row");
      row.back() = '+';
    }
    rows.push_back(std::move(row));
  }
  LeDiagram d(k, n, std::move(rows));
  CheckArgument(OmegaDS(d) == sigma,
                sigma.ToString() + " does not come from a diagram");
  return d;
}

IntervalPartitionCode OmegaDMCode(const LeDiagram& d) {
  CheckArgument(InFamily(d, DiagramFamily::kDBar),
                "OmegaDM needs a closed BCFW-like diagram, got " + d.ToString());
  IntervalPartitionCode code;
  code.n = d.n();
  std::vector<int> ends = d.HorizontalSteps();
  ends.back() = d.n();
  int lo = 1;
  for (int hi : ends) {
    code.intervals.push_back({lo, hi});
    lo = hi + 1;
  }
  for (int r = 1; r <= d.k(); ++r) {
    if (!d.RowHasPlus(r)) code.coloops |= Bit(d.VerticalLabel(r));
  }
  ValidateCode(code);
  return code;
}

Matroid OmegaDM(const LeDiagram& d) { return DecodeCode(OmegaDMCode(d)); }

SignVector SigmaOfMatroid(const Matroid& m) {
  return CodeSignVector(EncodeCode(m));
}

RationalVector PhiW(const Subspace& w, const Subspace& v) {
  CheckArgument(v.ambient() == w.ambient(), "V and W live in different spaces");
  CheckArgument(IsTotallyNonnegativeSubspace(v), "V is not totally nonnegative");
  const Subspace line = Intersect(v.OrthogonalComplement(), w);
  CheckArgument(line.dim() == 1, "V-perp n W is not a line");
  RationalVector out = line.basis().Row(0);
  if (!IsAltNormalized(SignOf(out))) {
    for (Rational& x : out) x = -x;
  }
  return out;
}

Subspace PhiWInverse(const RationalVector& w, int k) {
  const int n = static_cast<int>(w.size());
  const SignVector sigma = AltNormalize(SignOf(w));
  const IntervalPartitionCode code = OmegaDMCode(OmegaDSInverse(sigma, k));
  std::vector<RationalVector> perp;
  for (const auto& [lo, hi] : code.intervals) {
    RationalVector piece(n);
    for (int e = lo; e <= hi; ++e) piece[e - 1] = w[e - 1];
    perp.push_back(std::move(piece));
  }
  Subspace v = Subspace::Span(perp, n).OrthogonalComplement();
  CheckArgument(v.dim() == k, "block restrictions of w are dependent");
  return v;
}

std::optional<LeDiagram> AdjacentBySingleBox(const LeDiagram& d1,
                                             const LeDiagram& d2) {
  CheckMaximal(d1);
  CheckMaximal(d2);
  const bool first_smaller = d1.NumBoxes() < d2.NumBoxes();
  const LeDiagram& small = first_smaller ? d1 : d2;
  const LeDiagram& big = first_smaller ? d2 : d1;
  if (big.NumBoxes() != small.NumBoxes() + 1) return std::nullopt;
  int row = 0;
  for (int r = 1; r <= small.k(); ++r) {
    const int diff = big.RowLength(r) - small.RowLength(r);
    if (diff == 1 && row == 0) {
      row = r;
    } else if (diff != 0) {
      return std::nullopt;
    }
  }
  if (row == 0) return std::nullopt;
  std::vector<std::string> rows = small.rows();
  rows[row - 1].back() = '0';
  return LeDiagram(small.k(), small.n(), rows);
}

std::optional<LeDiagram> AdjacentBySignVectors(const LeDiagram& d1,
                                               const LeDiagram& d2) {
  CheckMaximal(d1);
  CheckMaximal(d2);
  const SignVector s1 = OmegaDS(d1);
  const SignVector s2 = OmegaDS(d2);
  int where = 0;
  for (int i = 1; i <= s1.size(); ++i) {
    if (s1[i] == s2[i]) continue;
    if (where != 0) return std::nullopt;
    where = i;
  }
  if (where < 2 || where > s1.size() - 1) return std::nullopt;
  SignVector meet = s1;
  meet.Set(where, 0);
  return OmegaDSInverse(meet, d1.k());
}

std::optional<LeDiagram> AdjacentByPartitions(const LeDiagram& d1,
                                              const LeDiagram& d2) {
  CheckMaximal(d1);
  CheckMaximal(d2);
  const IntervalPartitionCode c1 = OmegaDMCode(d1);
  const IntervalPartitionCode c2 = OmegaDMCode(d2);
  const std::vector<int> b1 = BlockIndex(c1);
  const std::vector<int> b2 = BlockIndex(c2);
  const int n = c1.n;
  int moved = 0;
  for (int e = 1; e <= n; ++e) {
    if (b1[e] == b2[e]) continue;
    if (moved != 0) return std::nullopt;
    moved = e;
  }
  if (moved < 2 || moved > n - 1) return std::nullopt;
  // Turn the moved element into a coloop in the code where it starts a block;
  // both codes then describe the same matroid.
  IntervalPartitionCode code = b1[moved - 1] != b1[moved] ? c1 : c2;
  code.coloops |= Bit(moved);
  return PositroidToLe(DecodeCode(code));
}

std::optional<LeDiagram> AdjacentByPermutations(const LeDiagram& d1,
                                                const LeDiagram& d2) {
  CheckMaximal(d1);
  CheckMaximal(d2);
  const std::vector<int> p1 = LeToPermutation(d1).images();
  const std::vector<int> p2 = LeToPermutation(d2).images();
  if (p1 == p2) return std::nullopt;
  const int n = d1.n();
  auto swap = [](int j, int x) { return x == j ? j + 1 : (x == j + 1 ? j : x); };
  for (int i = 2; i <= n - 1; ++i) {
    std::vector<int> conj(n), right(n), left(n);
    for (int x = 1; x <= n; ++x) {
      right[x - 1] = p1[swap(i, x) - 1];
      left[x - 1] = swap(i - 1, p1[x - 1]);
      conj[x - 1] = swap(i - 1, right[x - 1]);
    }
    if (conj != p2) continue;
    const int k = d1.k();
    const bool right_ok = Inversions(right) == k - 1;
    const bool left_ok = Inversions(left) == k - 1;
    if (right_ok == left_ok) return std::nullopt;
    const std::vector<int>& chosen = right_ok ? right : left;
    // The moved element i becomes a coloop, i.e. a white fixed point; every
    // other fixed point stays black.
    std::vector<int> white;
    if (chosen[i - 1] == i) white.push_back(i);
    const DecoratedPermutation pi(chosen, white);
    if (static_cast<int>(pi.AntiExcedances().size()) != k) return std::nullopt;
    return PermutationToLe(pi);
  }
  return std::nullopt;
}

std::optional<SignVector> ArrangementLabel(const CyclicArrangement& a,
                                           const SignVector& sigma) {
  if (FaceWitness(a, sigma)) return sigma;
  if (FaceWitness(a, sigma.Negated())) return sigma.Negated();
  return std::nullopt;
}

std::optional<LeDiagram> AdjacentGeometrically(const CyclicArrangement& a,
                                               const LeDiagram& d1,
                                               const LeDiagram& d2) {
  CheckMaximal(d1);
  CheckMaximal(d2);
  const std::optional<SignVector> s1 = ArrangementLabel(a, OmegaDS(d1));
  const std::optional<SignVector> s2 = ArrangementLabel(a, OmegaDS(d2));
  CheckArgument(s1 && s2, "maximal cell missing from the arrangement");
  // Faces in both closures lie below the meet of the two labels.
  SignVector meet(s1->size());
  int differences = 0;
  for (int i = 1; i <= s1->size(); ++i) {
    if ((*s1)[i] == (*s2)[i]) {
      meet.Set(i, (*s1)[i]);
    } else {
      ++differences;
    }
  }
  if (differences != 1) return std::nullopt;
  if (!FaceWitness(a, meet) || !IsBoundedFace(a, meet)) return std::nullopt;
  return OmegaDSInverse(AltNormalize(meet), d1.k());
}

bool AdjacencyReport::Consistent() const {
  if (by_box != by_signs || by_box != by_partitions ||
      by_box != by_permutations) {
    return false;
  }
  return !geometric || *geometric == by_box;
}

AdjacencyReport AdjacentMaximalCells(const LeDiagram& d1, const LeDiagram& d2,
                                     const CyclicArrangement* a) {
  AdjacencyReport r;
  r.by_box = AdjacentBySingleBox(d1, d2);
  r.by_signs = AdjacentBySignVectors(d1, d2);
  r.by_partitions = AdjacentByPartitions(d1, d2);
  r.by_permutations = AdjacentByPermutations(d1, d2);
  if (a != nullptr) r.geometric = AdjacentGeometrically(*a, d1, d2);
  return r;
}

bool InteriorByRows(const LeDiagram& d) {
  CheckArgument(InFamily(d, DiagramFamily::kDBar), "need a closed diagram");
  for (int r = 1; r <= d.k(); ++r) {
    if (d.RowLength(r) == 0) return false;
    if (d.RowHasPlus(r)) continue;
    const int above = r == 1 ? d.width() : d.RowLength(r - 1);
    if (above <= d.RowLength(r)) return false;
  }
  return true;
}

bool InteriorBySignVector(const LeDiagram& d) {
  return Var(OmegaDS(d)) == d.k();
}

bool InteriorByCode(const LeDiagram& d) {
  const IntervalPartitionCode code = OmegaDMCode(d);
  SubsetMask starts = 0;
  for (const auto& [lo, hi] : code.intervals) {
    if (lo != 1) starts |= Bit(lo);
  }
  return (code.coloops & ~starts) == 0;
}

bool InteriorByPermutation(const LeDiagram& d) {
  CheckArgument(InFamily(d, DiagramFamily::kDBar), "need a closed diagram");
  const DecoratedPermutation pi = LeToPermutation(d);
  const std::vector<int> anti = pi.AntiExcedances();
  for (int i : pi.white_fixed()) {
    if (i < 2 || i > d.n() - 1) return false;
    if (std::binary_search(anti.begin(), anti.end(), i - 1)) return false;
  }
  return true;
}

bool InteriorGeometrically(const CyclicArrangement& a, const LeDiagram& d) {
  const std::optional<SignVector> sigma = ArrangementLabel(a, OmegaDS(d));
  CheckArgument(sigma.has_value(), "cell missing from the arrangement");
  // Regions whose closure contains the face are the full labels above it.
  std::vector<int> zeros;
  for (int i = 1; i <= sigma->size(); ++i) {
    if ((*sigma)[i] == 0) zeros.push_back(i);
  }
  for (SubsetMask choice = 0; choice < (SubsetMask{1} << zeros.size());
       ++choice) {
    SignVector tau = *sigma;
    for (size_t z = 0; z < zeros.size(); ++z) {
      tau.Set(zeros[z], (choice >> z) & 1 ? 1 : -1);
    }
    if (FaceWitness(a, tau) && !IsBoundedFace(a, tau)) return false;
  }
  return true;
}

bool BoundaryReport::Consistent() const {
  return by_rows == by_signs && by_code == by_signs &&
         by_permutation == by_signs && (!geometric || *geometric == by_signs);
}

BoundaryReport IsInteriorCell(const LeDiagram& d, const CyclicArrangement* a) {
  BoundaryReport r;
  r.by_rows = InteriorByRows(d);
  r.by_signs = InteriorBySignVector(d);
  r.by_code = InteriorByCode(d);
  r.by_permutation = InteriorByPermutation(d);
  if (a != nullptr) r.geometric = InteriorGeometrically(*a, d);
  return r;
}

CellImage ImageOfCell(const LeDiagram& d, int bound) {
  CellImage image;
  std::set<SignVector> strata;
  for (const SignVector& s : DiagramVectors(d, bound)) {
    if (!s.IsZero() && VarBar(s) == d.k()) strata.insert(AltNormalize(s));
  }
  if (strata.empty()) throw std::logic_error("cell image meets no stratum");
  image.strata.assign(strata.begin(), strata.end());
  int fewest = d.n();
  for (const SignVector& s : image.strata) fewest = std::min(fewest, s.NumZeros());
  image.dimension = d.k() - fewest;
  for (int r = 1; r <= d.k(); ++r) image.plus_rows += d.RowHasPlus(r);
  image.injective = InFamily(d, DiagramFamily::kLBar);
  if (image.injective) {
    std::set<SignVector> slid;
    for (const LeDiagram& e : Slide(d)) slid.insert(OmegaDS(e));
    image.slide_strata.assign(slid.begin(), slid.end());
  }
  return image;
}

NoninjectivityCertificate NoninjectivityCertificateFor(
    const LeDiagram& d, const Subspace& w, std::mt19937_64& rng) {
  CheckArgument(!InFamily(d, DiagramFamily::kLBar),
                d.ToString() + " is in the closed L family; the map is injective");
  CheckArgument(w.ambient() == d.n() && w.dim() == d.k() + 1,
                "W must be a (k+1)-plane in Q^n");
  CheckScale(d.n() <= 8, "certificates limited to n <= 8");
  const Subspace v = Subspace::RowSpan(RandomCellRepresentative(d, rng));
  const Matroid m(d.n(), d.k(), Pluecker(v).Support());
  const SubsetMask special = m.Loops() | m.Coloops();

  NoninjectivityCertificate cert;
  bool found = false;
  for (const SignVector& tau : CompositionClosure(Circuits(v))) {
    if (tau.IsZero() || VarBar(tau) != d.k()) continue;
    for (int b = 1; b <= d.n() && !found; ++b) {
      if (tau[b] != 0 || (special & Bit(b))) continue;
      cert.tau = tau;
      cert.b = b;
      found = true;
    }
    if (found) break;
  }
  if (!found) throw std::logic_error("no fiber witness for " + d.ToString());

  const std::optional<RationalVector> in_v_perp =
      FindVectorWithSigns(v.OrthogonalComplement(), cert.tau);
  const std::optional<RationalVector> in_w = FindVectorWithSigns(w, cert.tau);
  if (!in_v_perp || !in_w) {
    throw std::logic_error("sign vector not realized for " + d.ToString());
  }
  // Torus action: rescale V so that the W-vector becomes orthogonal to it.
  RationalVector inverse_c(d.n(), Rational(1));
  for (int i = 0; i < d.n(); ++i) {
    if ((*in_v_perp)[i] != 0) inverse_c[i] = (*in_v_perp)[i] / (*in_w)[i];
  }
  cert.v = v.ScaleCoordinates(inverse_c);
  cert.t = 2;
  RationalVector stretch(d.n(), Rational(1));
  stretch[cert.b - 1] = cert.t;
  cert.v_t = cert.v.ScaleCoordinates(stretch);
  cert.line = *in_w;
  if (!IsAltNormalized(SignOf(cert.line))) {
    for (Rational& x : cert.line) x = -x;
  }
  return cert;
}

bool VerifyCertificate(const LeDiagram& d, const Subspace& w,
                       const NoninjectivityCertificate& cert) {
  const Matroid cell = PositroidOfDiagram(d);
  for (const Subspace* s : {&cert.v, &cert.v_t}) {
    if (!IsTotallyNonnegativeSubspace(*s)) return false;
    if (Matroid(d.n(), d.k(), Pluecker(*s).Support()) != cell) return false;
  }
  const SubsetMask special = cell.Loops() | cell.Coloops();
  if (cert.b < 1 || cert.b > d.n() || (special & Bit(cert.b))) return false;
  if (cert.tau[cert.b] != 0 || VarBar(cert.tau) != d.k()) return false;
  // Distinct points: Delta_I / Delta_J changes by the factor t.
  SubsetMask with_b = 0, without_b = 0;
  for (SubsetMask basis : cell.bases()) {
    if ((basis & Bit(cert.b)) && with_b == 0) with_b = basis;
    if (!(basis & Bit(cert.b)) && without_b == 0) without_b = basis;
  }
  const PluckerVector p = Pluecker(cert.v);
  const PluckerVector pt = Pluecker(cert.v_t);
  const Rational ratio = (pt.at(with_b) / pt.at(without_b)) *
                         (p.at(without_b) / p.at(with_b));
  if (ratio != cert.t || cert.t == 1) return false;
  if (!MembershipBm1(w, cert.line, d.k())) return false;
  return Proportional(PhiW(w, cert.v), cert.line) &&
         Proportional(PhiW(w, cert.v_t), cert.line);
}

AmplituhedronModel AmplituhedronModel::Default(int n, int k) {
  CheckArgument(n >= 1 && k >= 0 && k <= n - 1, "need 0 <= k <= n-1");
  RationalVector t;
  for (int i = 1; i <= n; ++i) t.push_back(i);
  return FromMatrix(VandermondeMatrix(t, k + 1));
}

AmplituhedronModel AmplituhedronModel::FromMatrix(const RationalMatrix& z) {
  CheckArgument(z.rows() >= 1 && z.rows() <= z.cols(), "Z must be (k+1) x n");
  CheckArgument(IsTotallyPositive(z, /*maximal_only=*/true),
                "Z needs positive maximal minors");
  CheckScale(z.cols() <= 10, "strata table limited to n <= 10");
  AmplituhedronModel model;
  model.z_ = z;
  model.w_ = Subspace::RowSpan(z);
  const int k = z.rows() - 1;
  for (const SignVector& sigma : EnumerateSignSet(z.cols(), k, true)) {
    Stratum s;
    s.label = sigma;
    s.dimension = k - sigma.NumZeros();
    s.diagram = OmegaDSInverse(sigma, k);
    s.code = OmegaDMCode(s.diagram);
    std::optional<RationalVector> x = FindVectorWithSigns(model.w_, sigma);
    if (!x) throw std::logic_error("stratum " + sigma.ToString() + " is empty");
    s.witness = std::move(*x);
    model.strata_.emplace(sigma, std::move(s));
  }
  return model;
}

const Stratum& AmplituhedronModel::StratumOf(const RationalVector& w) const {
  CheckArgument(w_.Contains(w), "w is not in W");
  const SignVector s = SignOf(w);
  CheckArgument(!s.IsZero(), "w must be nonzero");
  auto it = strata_.find(AltNormalize(s));
  CheckArgument(it != strata_.end(),
                "span(w) is not in the amplituhedron: " + s.ToString());
  return it->second;
}

RationalVector RandomVandermondeNodes(int n, std::mt19937_64& rng) {
  RationalVector t;
  Rational current = 0;
  for (int i = 0; i < n; ++i) {
    current += RandomRational(rng, 1, 9);
    t.push_back(current);
  }
  return t;
}

RationalVector RandomVectorIn(const Subspace& s, std::mt19937_64& rng) {
  CheckArgument(s.dim() >= 1, "subspace is zero");
  while (true) {
    RationalVector out(s.ambient());
    for (int i = 0; i < s.dim(); ++i) {
      const Rational c = RandomRational(rng, -9, 9);
      for (int j = 0; j < s.ambient(); ++j) out[j] += c * s.basis()(i, j);
    }
    if (!SignOf(out).IsZero()) return out;
  }
}

}  // namespace amplikit
