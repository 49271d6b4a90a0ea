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

// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "amplikit/amplituhedron.h"
#include "amplikit/arrangement.h"
#include "amplikit/diagram_families.h"
#include "amplikit/plabic_graph.h"
#include "amplikit/positroid.h"
#include "amplikit/suites.h"

namespace amplikit {
namespace {

// Wall-clock limits in seconds; 0 means no limit.
constexpr double kLimitBcfw = 5;
constexpr double kLimitFPolynomial = 30;
constexpr double kLimitFaces = 60;
constexpr double kLimitPosets = 60;
constexpr double kLimitImages = 300;

// Sampling sizes.
constexpr uint64_t kSeed = 2026;
constexpr int kWorkedExampleTrials = 20;
constexpr int kImageSamples = 50;
constexpr int kImageCertificates = 10;
constexpr int kGkInstances = 100;

const std::vector<std::pair<int, int>> kFTypes{{4, 2}, {5, 2}, {5, 3}, {6, 3}};

struct Outcome {
  bool ok = true;
  std::string note;
};

int64_t Binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  int64_t c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

// Runs every item of a suite and stops at the first failure.
Outcome RunSuite(const std::string& name, int max_n,
                 const std::function<SuiteResult(int, int)>& fn) {
  int64_t checked = 0;
  for (int n = 1; n <= max_n; ++n) {
    for (int k = 0; k < n; ++k) {
      const SuiteResult r = fn(n, k);
      checked += r.checked;
      if (!r.passed) {
        return {false, name + " n=" + std::to_string(n) + " k=" +
                           std::to_string(k) + ": " + r.counterexample};
      }
    }
  }
  return {true, std::to_string(checked) + " checked"};
}

Outcome Criterion1() {
  for (int n = 1; n <= 10; ++n) {
    for (int k = 0; k < n; ++k) {
      if (static_cast<int64_t>(BcfwCells(n, k).size()) != Binomial(n - 1, k)) {
        return {false, "n=" + std::to_string(n) + " k=" + std::to_string(k)};
      }
    }
  }
  return {true, "n <= 10"};
}

Outcome Criterion2() {
  std::string note;
  for (const auto& [n, k] : kFTypes) {
    const std::vector<int64_t> closed = FPolynomial(n, k);
    std::vector<int64_t> graded(k + 1, 0);
    for (const LeDiagram& d : EnumerateFamily(n, k, DiagramFamily::kDBar)) {
      ++graded[d.NumPluses()];
    }
    RationalVector t;
    for (int i = 1; i <= n; ++i) t.push_back(i);
    const std::vector<int64_t> faces =
        FVector(EnumerateFaces(VandermondeArrangement(t, k)), k, true);
    const std::string text = FormatPolynomial(closed);
    if (closed != graded || closed != faces ||
        EvaluatePolynomial(closed, -1) != 1) {
      return {false, "(" + std::to_string(n) + "," + std::to_string(k) + ") " +
                         text};
    }
    note += (note.empty() ? "" : " ") + text;
  }
  if (FormatPolynomial(FPolynomial(5, 3)) != "4q³+15q²+20q+10") {
    return {false, "f_{5,3}"};
  }
  return {true, note};
}

// Bounded labels equal the closed sign set and unbounded labels are the
// nonzero sign vectors with varbar <= k - 1.
bool ClassificationHolds(const CyclicArrangement& a) {
  const int n = a.n(), k = a.k();
  std::set<SignVector> bounded, unbounded, expected_unbounded;
  for (const Face& f : EnumerateFaces(a, true)) {
    (f.bounded ? bounded : unbounded).insert(f.label);
  }
  const std::vector<SignVector> closed = EnumerateSignSet(n, k, true);
  for (const SignVector& s : AllSignVectors(n)) {
    if (!s.IsZero() && VarBar(s) <= k - 1) expected_unbounded.insert(s);
  }
  return bounded == std::set<SignVector>(closed.begin(), closed.end()) &&
         unbounded == expected_unbounded;
}

const std::vector<RationalVector> kExampleBasis{
    {-1, -1, -1, -1, -1}, {0, 1, 2, 3, 4}, {10, 6, 3, 1, 0}};

Outcome Criterion3() {
  if (!ClassificationHolds(CyclicArrangement::Build(kExampleBasis))) {
    return {false, "example basis"};
  }
  std::mt19937_64 rng(kSeed);
  int built = 1;
  for (const auto& [n, k] : kFTypes) {
    for (int trial = 0; trial < 3; ++trial) {
      const RationalVector t = RandomVandermondeNodes(n, rng);
      if (!ClassificationHolds(VandermondeArrangement(t, k))) {
        return {false, "random Vandermonde (" + std::to_string(n) + "," +
                           std::to_string(k) + ")"};
      }
      ++built;
    }
  }
  return {true, std::to_string(built) + " arrangements"};
}

Outcome Criterion4() {
  const CyclicArrangement a = CyclicArrangement::Build(kExampleBasis);
  RationalVector u{69, -59, -97, -45, 97};
  for (Rational& x : u) x /= 831;
  if (a.orientation_vector() != u || a.negated_w0() || u[0] <= 0) {
    return {false, "orientation vector"};
  }
  const std::vector<std::string> lines{"10y = 1", "x + 6y = 1", "2x + 3y = 1",
                                       "3x + y = 1", "4x = 1"};
  for (int i = 1; i <= 5; ++i) {
    if (a.HyperplaneString(i) != lines[i - 1]) {
      return {false, "line " + std::to_string(i) + ": " + a.HyperplaneString(i)};
    }
  }
  return {true, "u = (69,-59,-97,-45,97)/831"};
}

Outcome Criterion5() {
  const RationalMatrix z =
      RationalMatrix::FromRows({{1, 0, 0, 1}, {0, 1, 0, -1}, {0, 0, 1, 1}});
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<int> num(0, 30), den(1, 7);
  for (int trial = 0; trial < kWorkedExampleTrials; ++trial) {
    const int an = num(rng), ad = den(rng), bn = num(rng), bd = den(rng);
    const Rational a = MakeRational(an, ad), b = MakeRational(bn, bd);
    const Subspace v =
        Subspace::RowSpan(RationalMatrix::FromRows({{1, a, 0, 0}, {0, 0, 1, b}}));
    const Subspace x =
        Intersect(Subspace::RowSpan(z), v.OrthogonalComplement());
    const RationalVector expected{a * (b + 1), -(b + 1), -b * (a + 1), a + 1};
    const Subspace y = FZ(z, x);
    const Subspace y_expected = Subspace::RowSpan(
        RationalMatrix::FromRows({{1, a, 0}, {b, -b, 1 + b}}));
    const bool ok =
        x == Subspace::RowSpan(RationalMatrix::FromRows({expected})) &&
        y == y_expected && FZInverse(z, y) == x &&
        PlueckerTranslate(y, z).ProportionalTo(Pluecker(x)) &&
        PlueckerTranslate(y_expected, z).ProportionalTo(Pluecker(x));
    if (!ok) {
      return {false, "a=" + a.get_str() + " b=" + b.get_str()};
    }
  }
  return {true, std::to_string(kWorkedExampleTrials) + " (a,b)"};
}

Outcome Criterion6() {
  return RunSuite("bijections", 7, [](int n, int k) {
    return VerifyBijections(n, k);
  });
}

Outcome Criterion7() {
  Outcome adjacency = RunSuite("adjacency", 7, [](int n, int k) {
    return VerifyAdjacency(n, k, false);
  });
  if (!adjacency.ok) return adjacency;
  for (const auto& [n, k] : std::vector<std::pair<int, int>>{{4, 2}, {5, 2}, {5, 3}}) {
    const SuiteResult r = VerifyAdjacency(n, k, true);
    if (!r.passed) return {false, "geometric adjacency: " + r.counterexample};
  }
  Outcome boundary = RunSuite("boundary", 7, [](int n, int k) {
    return VerifyBoundary(n, k, true);
  });
  if (!boundary.ok) return boundary;
  return {true, "adjacency " + adjacency.note + ", boundary " + boundary.note};
}

Outcome Criterion8() {
  return RunSuite("image", 6, [](int n, int k) {
    return VerifyImages(n, k, ItemSeed(kSeed, n, k), kImageSamples,
                        kImageCertificates);
  });
}

Outcome Criterion9() {
  const std::vector<LeDiagram> cells = AllLeDiagrams(2, 4);
  const size_t by_permutations = AllDecoratedPermutations(4, 2).size();
  if (cells.size() != 33 || by_permutations != 33) {
    return {false, "cell counts " + std::to_string(cells.size()) + " and " +
                       std::to_string(by_permutations)};
  }
  std::mt19937_64 rng(kSeed);
  for (const LeDiagram& d : cells) {
    const Subspace v = Subspace::RowSpan(RandomCellRepresentative(d, rng));
    const std::vector<SignVector> composed = CompositionClosure(Circuits(v));
    if (composed != BruteForceVectors(v) || composed != DiagramVectors(d)) {
      return {false, d.ToString()};
    }
  }
  return {true, "33 cells"};
}

Outcome Criterion10() {
  return RunSuite("gk-sampling", 7, [](int n, int k) {
    return VerifyGantmakherKrein(n, k, ItemSeed(kSeed, n, k), kGkInstances);
  });
}

}  // namespace
}  // namespace amplikit

int main() {
  using namespace amplikit;
  struct Criterion {
    const char* name;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"BCFW counts", kLimitBcfw, Criterion1},
      {"f-polynomial agreement", kLimitFPolynomial, Criterion2},
      {"face classification", kLimitFaces, Criterion3},
      {"orientation example", 0, Criterion4},
      {"f_Z worked example", 0, Criterion5},
      {"poset isomorphisms", kLimitPosets, Criterion6},
      {"adjacency and boundary", 0, Criterion7},
      {"images of cells", kLimitImages, Criterion8},
      {"oriented-matroid oracle", 0, Criterion9},
      {"Gantmakher-Krein", 0, Criterion10}};
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    if (criteria[i].limit > 0 && secs > criteria[i].limit) {
      o.ok = false;
      o.note += " (over the time limit)";
    }
    std::ostringstream time;
    time.precision(2);
    time << std::fixed << secs;
    std::cout << "criterion " << i + 1 << " " << (o.ok ? "PASS" : "FAIL")
              << ": " << criteria[i].name << "; " << o.note << " ["
              << time.str() << " s]" << std::endl;
    failed += !o.ok;
  }
  return failed;
}
