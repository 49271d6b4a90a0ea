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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "amplikit/diagram_families.h"
#include "amplikit/errors.h"
#include "amplikit/plabic_graph.h"

namespace amplikit {
namespace {

RationalMatrix M(const std::vector<RationalVector>& rows) {
  return RationalMatrix::FromRows(rows);
}

Subspace Line(const RationalVector& v) { return Subspace::RowSpan(M({v})); }

RationalVector Iota(int n) {
  RationalVector t;
  for (int i = 1; i <= n; ++i) t.push_back(i);
  return t;
}

std::set<SignVector> AsSet(const std::vector<SignVector>& v) {
  return std::set<SignVector>(v.begin(), v.end());
}

std::set<SignVector> Signs(std::initializer_list<const char*> s) {
  std::set<SignVector> out;
  for (const char* x : s) out.insert(SignVector::FromString(x));
  return out;
}

const RationalMatrix kZ = M({{1, 0, 0, 1}, {0, 1, 0, -1}, {0, 0, 1, 1}});

TEST(WorkedExampleTest, FzOfTwoParameterCell) {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> num(0, 20), den(1, 6);
  for (int trial = 0; trial < 20; ++trial) {
    const int an = num(rng), ad = den(rng), bn = num(rng), bd = den(rng);
    const Rational a = MakeRational(an, ad), b = MakeRational(bn, bd);
    const RationalMatrix v = M({{1, a, 0, 0}, {0, 0, 1, b}});
    const Subspace x = Intersect(Subspace::RowSpan(kZ),
                                 Subspace::RowSpan(v).OrthogonalComplement());
    const RationalVector expected{a * (b + 1), -(b + 1), -b * (a + 1), a + 1};
    ASSERT_EQ(x, Line(expected));
    const Subspace y = FZ(kZ, x);
    const RationalVector y1{1, a, 0}, y2{b, -b, 1 + b};
    ASSERT_EQ(y, Subspace::RowSpan(M({y1, y2})));
    for (int j = 0; j < 4; ++j) {
      const RationalMatrix cols =
          M({y1, y2, kZ.Column(j)}).Transpose();
      ASSERT_EQ(Determinant(cols), expected[j]);
    }
    ASSERT_EQ(FZInverse(kZ, y), x);
    ASSERT_TRUE(PlueckerTranslate(y, kZ).ProportionalTo(Pluecker(x)));
  }
}

TEST(WorkedExampleTest, RandomTranslationIsProportional) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const RationalMatrix z = VandermondeMatrix(RandomVandermondeNodes(5, rng), 3);
    const Subspace x = Line(RandomVectorIn(Subspace::RowSpan(z), rng));
    const Subspace y = FZ(z, x);
    ASSERT_EQ(y.dim(), 2);
    ASSERT_TRUE(PlueckerTranslate(y, z).ProportionalTo(Pluecker(x)));
    ASSERT_EQ(FZInverse(z, y), x);
  }
}

const RationalMatrix kPentagon =
    M({{1, 0, 0, 1, 3}, {0, 1, 0, -1, -2}, {0, 0, 1, 1, 1}});

TEST(PentagonTest, SequenceThroughVertexThree) {
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<int> c(-9, 9);
  for (int trial = 0; trial < 10; ++trial) {
    const Rational y1 = c(rng), y2 = c(rng), y3 = c(rng);
    if (y1 == 0 && y2 == 0 && y3 == 0) continue;
    const std::vector<RationalVector> seqs =
        ZSideSequences(Line({y1, y2, y3}), kPentagon);
    ASSERT_EQ(seqs.size(), 5u);
    // The stored basis of the line is y scaled so its first nonzero entry is 1.
    const Rational scale = y1 != 0 ? y1 : y2 != 0 ? y2 : y3;
    RationalVector expected{y2, -y1, y1 + y2, 2 * y1 + 3 * y2};
    for (Rational& e : expected) e /= scale;
    ASSERT_EQ(seqs[2], expected);
  }
}

// y or -y is a strictly positive combination of the columns of z.
bool InOpenCone(const RationalMatrix& z, const RationalVector& y) {
  for (int s : {1, -1}) {
    std::vector<LinearConstraint> cs;
    for (int r = 0; r < z.rows(); ++r) {
      cs.push_back({z.Row(r), -s * y[r], Relation::kZero});
    }
    for (int i = 0; i < z.cols(); ++i) {
      RationalVector e(z.cols(), Rational(0));
      e[i] = 1;
      cs.push_back({e, 0, Relation::kPositive});
    }
    if (SignFeasible(cs, z.cols())) return true;
  }
  return false;
}

TEST(PentagonTest, MembershipIsTheInterior) {
  EXPECT_TRUE(MembershipF(Line({5, -2, 4}), kPentagon));
  EXPECT_FALSE(MembershipF(Line({1, 1, 0}), kPentagon));
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> c(-6, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const RationalVector y{c(rng), c(rng), c(rng)};
    if (y[0] == 0 && y[1] == 0 && y[2] == 0) continue;
    ASSERT_EQ(MembershipF(Line(y), kPentagon), InOpenCone(kPentagon, y))
        << FormatRational(y[0]) << " " << FormatRational(y[1]) << " "
        << FormatRational(y[2]);
  }
}

TEST(BijectionTest, SigmaOfDecodedMatroid) {
  const LeDiagram d(2, 5, {"0+", "00"});
  EXPECT_EQ(SigmaOfMatroid(OmegaDM(d)), OmegaDS(d));
  EXPECT_EQ(OmegaDS(d), SignVector::FromString("++0++"));
}

TEST(ImageTest, TwoCellsWithTheSameImage) {
  const auto expected = Signs({"+--", "+0-", "++-"});
  const CellImage a = ImageOfCell(LeDiagram(1, 3, {"+0"}));
  const CellImage b = ImageOfCell(LeDiagram(1, 3, {"++"}));
  EXPECT_EQ(AsSet(a.strata), expected);
  EXPECT_EQ(AsSet(b.strata), expected);
  EXPECT_TRUE(a.injective);
  EXPECT_FALSE(b.injective);
  EXPECT_EQ(a.dimension, 1);
  EXPECT_EQ(b.dimension, 1);
  EXPECT_EQ(b.plus_rows, 1);
}

TEST(ImageTest, CertificateForTwoPlusRow) {
  const LeDiagram d(1, 4, {"+++"});
  const Subspace w = VandermondeSubspace(Iota(4), 2);
  std::mt19937_64 rng(43);
  const NoninjectivityCertificate cert = NoninjectivityCertificateFor(d, w, rng);
  EXPECT_TRUE(VerifyCertificate(d, w, cert));
  EXPECT_NE(cert.v, cert.v_t);
  EXPECT_EQ(cert.tau[cert.b], 0);
  EXPECT_TRUE(MembershipBm1(w, cert.line, 1));
  EXPECT_THROW(NoninjectivityCertificateFor(LeDiagram(1, 4, {"+"}), w, rng),
               InvalidArgument);
}

TEST(PhiWTest, ClosedCellsMapToTheirSignVectors) {
  const Subspace w = VandermondeSubspace(Iota(5), 3);
  std::mt19937_64 rng(47);
  for (const LeDiagram& d : EnumerateFamily(5, 2, DiagramFamily::kDBar)) {
    const Subspace v = Subspace::RowSpan(RandomCellRepresentative(d, rng));
    const RationalVector line = PhiW(w, v);
    ASSERT_EQ(SignOf(line), OmegaDS(d)) << d.ToString();
    ASSERT_EQ(PhiWInverse(line, 2), v) << d.ToString();
    ASSERT_TRUE(MembershipBm1(w, line, 2));
    ASSERT_EQ(MembershipG(Line(line), 2), IsInteriorCell(d).interior())
        << d.ToString();
  }
}

TEST(PhiWTest, TopCellGivesFullSignVectors) {
  std::mt19937_64 rng(53);
  for (int k = 1; k <= 4; ++k) {
    const int n = k + 3;
    const Subspace w = VandermondeSubspace(RandomVandermondeNodes(n, rng), k + 1);
    const Subspace v = VandermondeSubspace(RandomVandermondeNodes(n, rng), k);
    const SignVector s = SignOf(PhiW(w, v));
    EXPECT_EQ(s.NumZeros(), 0);
    EXPECT_EQ(Var(s), k);
  }
}

TEST(ModelTest, DefaultModel) {
  const AmplituhedronModel model = AmplituhedronModel::Default(5, 2);
  EXPECT_EQ(model.strata().size(), 31u);
  for (const auto& [label, stratum] : model.strata()) {
    EXPECT_EQ(SignOf(stratum.witness), label);
    EXPECT_TRUE(model.w().Contains(stratum.witness));
    EXPECT_EQ(OmegaDS(stratum.diagram), label);
    EXPECT_EQ(stratum.dimension, stratum.diagram.NumPluses());
    EXPECT_EQ(&model.StratumOf(stratum.witness), &stratum);
  }
  EXPECT_THROW(AmplituhedronModel::FromMatrix(M({{1, 0, 0, -1}, {0, 1, 0, 1}, {0, 0, 1, 1}})),
               InvalidArgument);
  EXPECT_THROW(AmplituhedronModel::FromMatrix(M({{1, 0, 0}, {0, -1, 1}})),
               InvalidArgument);
}

int EdgesBySignVectors(int n, int k) {
  int edges = 0;
  for (const SignVector& s : EnumerateSignSet(n, k, true)) {
    if (s.NumZeros() != 1) continue;
    bool both = true;
    for (int fill : {1, -1}) {
      SignVector t = s;
      for (int i = 1; i <= n; ++i) {
        if (s[i] == 0) t.Set(i, fill);
      }
      both = both && Var(t) == k;
    }
    edges += both;
  }
  return edges;
}

TEST(AdjacencyTest, EdgeCounts) {
  for (int n = 2; n <= 7; ++n) {
    for (int k = 1; k < n; ++k) {
      const std::vector<LeDiagram> cells = BcfwCells(n, k);
      int edges = 0;
      for (size_t i = 0; i < cells.size(); ++i) {
        for (size_t j = i + 1; j < cells.size(); ++j) {
          const AdjacencyReport r = AdjacentMaximalCells(cells[i], cells[j]);
          ASSERT_TRUE(r.Consistent());
          edges += r.by_signs.has_value();
        }
      }
      ASSERT_EQ(edges, EdgesBySignVectors(n, k)) << n << "," << k;
      if (n == 7) {
        const int frozen[] = {0, 5, 20, 30, 20, 5, 0};
        ASSERT_EQ(edges, frozen[k]) << k;
      }
    }
  }
}

TEST(AdjacencyTest, GeometricAgreement) {
  const CyclicArrangement a = VandermondeArrangement(Iota(5), 2);
  const std::vector<LeDiagram> cells = BcfwCells(5, 2);
  for (const LeDiagram& d1 : cells) {
    for (const LeDiagram& d2 : cells) {
      if (d1 == d2) continue;
      const AdjacencyReport r = AdjacentMaximalCells(d1, d2, &a);
      ASSERT_TRUE(r.geometric.has_value());
      ASSERT_TRUE(r.Consistent()) << d1.ToString() << " " << d2.ToString();
      if (r.by_box) {
        ASSERT_TRUE(InFamily(*r.by_box, DiagramFamily::kDBar));
        ASSERT_EQ(r.by_box->NumPluses(), 1);
      }
    }
  }
}

TEST(BoundaryTest, InteriorCounts) {
  const int frozen[] = {1, 11, 41, 63, 41, 11, 1};
  for (int k = 0; k < 7; ++k) {
    int interior = 0;
    for (const LeDiagram& d : EnumerateFamily(7, k, DiagramFamily::kDBar)) {
      const BoundaryReport r = IsInteriorCell(d);
      ASSERT_TRUE(r.Consistent()) << d.ToString();
      interior += r.interior();
    }
    EXPECT_EQ(interior, frozen[k]) << k;
  }
}

TEST(BoundaryTest, MaximalCellsAreInterior) {
  const CyclicArrangement a = VandermondeArrangement(Iota(6), 3);
  for (const LeDiagram& d : BcfwCells(6, 3)) {
    const BoundaryReport r = IsInteriorCell(d, &a);
    EXPECT_TRUE(r.interior());
    EXPECT_TRUE(r.Consistent());
  }
  EXPECT_FALSE(IsInteriorCell(LeDiagram::Zero(2, 4, {})).interior());
}

}  // namespace
}  // namespace amplikit
