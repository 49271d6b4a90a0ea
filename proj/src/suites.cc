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

#include "amplikit/suites.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "amplikit/amplituhedron.h"
#include "amplikit/arrangement.h"
#include "amplikit/diagram_families.h"
#include "amplikit/errors.h"
#include "amplikit/plabic_graph.h"
#include "amplikit/positroid.h"

namespace amplikit {

namespace {

void CheckType(int n, int k) {
  CheckArgument(n >= 1 && k >= 0 && k < n, "need 0 <= k < n");
}

int64_t Binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

RationalVector Nodes(int n) {
  RationalVector t;
  for (int i = 1; i <= n; ++i) t.push_back(Rational(i));
  return t;
}

std::string Pair(const LeDiagram& a, const LeDiagram& b) {
  return a.ToString() + " / " + b.ToString();
}

}  // namespace

uint64_t ItemSeed(uint64_t seed, int n, int k) {
  // splitmix64 finalizer over the packed triple.
  uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (1 + 64 * static_cast<uint64_t>(n) +
                                               static_cast<uint64_t>(k));
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

SuiteResult VerifyBijections(int n, int k) {
  CheckType(n, k);
  SuiteResult r;
  const std::vector<LeDiagram> closed =
      EnumerateFamily(n, k, DiagramFamily::kDBar);
  std::vector<SignVector> sigma;
  std::vector<Matroid> matroids;
  for (const LeDiagram& d : closed) {
    ++r.checked;
    const SignVector s = OmegaDS(d);
    if (!IsAltNormalized(s) || VarBar(s) != k) {
      r.Fail("OmegaDS(" + d.ToString() + ") = " + s.ToString() +
             " is not in the closed sign set");
      return r;
    }
    if (OmegaDSInverse(s, k) != d) {
      r.Fail("OmegaDS inverse fails at " + d.ToString());
      return r;
    }
    const Matroid m = OmegaDM(d);
    if (m != PositroidOfDiagram(d)) {
      r.Fail("OmegaDM(" + d.ToString() + ") differs from its positroid");
      return r;
    }
    if (EncodeCode(m) != OmegaDMCode(d)) {
      r.Fail("code of OmegaDM(" + d.ToString() + ") does not round trip");
      return r;
    }
    if (SigmaOfMatroid(m) != s) {
      r.Fail("sigma(OmegaDM(" + d.ToString() + ")) != OmegaDS");
      return r;
    }
    sigma.push_back(s);
    matroids.push_back(m);
  }
  const std::vector<SignVector> expected = EnumerateSignSet(n, k, true);
  const std::set<SignVector> hit(sigma.begin(), sigma.end());
  if (hit.size() != closed.size() ||
      hit != std::set<SignVector>(expected.begin(), expected.end())) {
    r.Fail("OmegaDS is not a bijection onto the closed sign set");
    return r;
  }
  for (size_t i = 0; i < closed.size(); ++i) {
    const std::vector<LeDiagram> below = DownSet(closed[i]);
    const std::set<LeDiagram> down(below.begin(), below.end());
    for (size_t j = 0; j < closed.size(); ++j) {
      const bool le = down.count(closed[j]) > 0;
      if (SignLeq(sigma[j], sigma[i]) != le ||
          WeakLeq(matroids[j], matroids[i]) != le) {
        r.Fail("order mismatch at " + Pair(closed[j], closed[i]));
        return r;
      }
    }
  }
  r.detail = "closed diagrams: " + std::to_string(closed.size());
  return r;
}

SuiteResult VerifyTriangulation(int n, int k) {
  CheckType(n, k);
  SuiteResult r;
  const std::vector<LeDiagram> maximal =
      EnumerateFamily(n, k, DiagramFamily::kD);
  std::vector<LeDiagram> bcfw = BcfwCells(n, k);
  std::sort(bcfw.begin(), bcfw.end());
  if (bcfw != maximal) {
    r.Fail("BCFW recursion and the maximal family differ");
    return r;
  }
  if (static_cast<int64_t>(maximal.size()) != Binomial(n - 1, k)) {
    r.Fail("expected C(n-1,k) = " + std::to_string(Binomial(n - 1, k)) +
           " maximal cells, found " + std::to_string(maximal.size()));
    return r;
  }
  std::map<SignVector, LeDiagram> owner;
  for (const LeDiagram& d : maximal) {
    ++r.checked;
    const SignVector s = OmegaDS(d);
    if (s.NumZeros() != 0 || VarBar(s) != k) {
      r.Fail(d.ToString() + " does not map to an open sign vector");
      return r;
    }
    const auto [it, inserted] = owner.emplace(s, d);
    if (!inserted) {
      r.Fail(s.ToString() + " is hit twice: " + Pair(it->second, d));
      return r;
    }
  }
  for (const SignVector& s : EnumerateSignSet(n, k, false)) {
    ++r.checked;
    if (!owner.count(s)) {
      r.Fail("open sign vector " + s.ToString() + " is not covered");
      return r;
    }
  }
  if (owner.size() != EnumerateSignSet(n, k, false).size()) {
    r.Fail("maximal cells outside the open sign set");
    return r;
  }
  for (const SignVector& s : EnumerateSignSet(n, k, true)) {
    ++r.checked;
    const bool covered =
        std::any_of(owner.begin(), owner.end(),
                    [&](const auto& e) { return SignLeq(s, e.first); });
    if (!covered) {
      r.Fail("closed sign vector " + s.ToString() +
             " lies in no closed maximal cell");
      return r;
    }
  }
  r.detail = "maximal cells: " + std::to_string(maximal.size());
  return r;
}

SuiteResult VerifyAdjacency(int n, int k, bool geometric) {
  CheckType(n, k);
  SuiteResult r;
  std::optional<CyclicArrangement> a;
  if (geometric && k >= 1) a = VandermondeArrangement(Nodes(n), k);
  const std::vector<LeDiagram> maximal =
      EnumerateFamily(n, k, DiagramFamily::kD);
  int edges = 0;
  for (size_t i = 0; i < maximal.size(); ++i) {
    for (size_t j = i + 1; j < maximal.size(); ++j) {
      ++r.checked;
      const AdjacencyReport rep =
          AdjacentMaximalCells(maximal[i], maximal[j], a ? &*a : nullptr);
      if (!rep.Consistent()) {
        r.Fail("adjacency conditions disagree on " +
               Pair(maximal[i], maximal[j]));
        return r;
      }
      if (!rep.by_signs) continue;
      ++edges;
      const LeDiagram& shared = *rep.by_signs;
      if (!InFamily(shared, DiagramFamily::kDBar) ||
          shared.NumPluses() != k - 1) {
        r.Fail("shared boundary " + shared.ToString() +
               " is not a codimension-one closed cell");
        return r;
      }
    }
  }
  r.detail = "edges: " + std::to_string(edges) +
             (a ? " (geometric checked)" : "");
  return r;
}

SuiteResult VerifyBoundary(int n, int k, bool geometric) {
  CheckType(n, k);
  SuiteResult r;
  std::optional<CyclicArrangement> a;
  if (geometric && k >= 1) a = VandermondeArrangement(Nodes(n), k);
  int interior = 0;
  const std::vector<LeDiagram> closed =
      EnumerateFamily(n, k, DiagramFamily::kDBar);
  for (const LeDiagram& d : closed) {
    ++r.checked;
    const BoundaryReport rep = IsInteriorCell(d, a ? &*a : nullptr);
    if (!rep.Consistent()) {
      r.Fail("interior conditions disagree on " + d.ToString());
      return r;
    }
    interior += rep.interior();
  }
  r.detail = "interior cells: " + std::to_string(interior) + " of " +
             std::to_string(closed.size()) +
             (a ? " (geometric checked)" : "");
  return r;
}

SuiteResult VerifyImages(int n, int k, uint64_t seed, int samples,
                         int max_certificates) {
  CheckType(n, k);
  SuiteResult r;
  std::mt19937_64 rng(seed);
  const Subspace w = VandermondeSubspace(Nodes(n), k + 1);
  int injective = 0;
  int certificates = 0;
  for (const LeDiagram& d : AllLeDiagrams(k, n)) {
    ++r.checked;
    const CellImage image = ImageOfCell(d);
    if (image.injective != InLFamilyViaCircuits(d)) {
      r.Fail("closed L membership disagrees with circuits at " + d.ToString());
      return r;
    }
    if (image.dimension != image.plus_rows) {
      r.Fail("image of " + d.ToString() + " has dimension " +
             std::to_string(image.dimension) + ", expected " +
             std::to_string(image.plus_rows));
      return r;
    }
    if (image.injective) {
      ++injective;
      if (image.strata != image.slide_strata) {
        r.Fail("image of " + d.ToString() + " differs from OmegaDS(Slide)");
        return r;
      }
    }
    const bool closed = InFamily(d, DiagramFamily::kDBar);
    for (int s = 0; s < samples; ++s) {
      const Subspace v = Subspace::RowSpan(RandomCellRepresentative(d, rng));
      const RationalVector line = PhiW(w, v);
      const SignVector label = SignOf(line);
      if (!std::binary_search(image.strata.begin(), image.strata.end(),
                              label)) {
        r.Fail("phi_W sample of " + d.ToString() + " lands in " +
               label.ToString() + " outside the claimed strata");
        return r;
      }
      if (closed && PhiWInverse(line, k) != v) {
        r.Fail("phi_W inverse fails on a sample of " + d.ToString());
        return r;
      }
    }
    if (!image.injective && k >= 1 && certificates < max_certificates) {
      ++certificates;
      const NoninjectivityCertificate cert =
          NoninjectivityCertificateFor(d, w, rng);
      if (!VerifyCertificate(d, w, cert)) {
        r.Fail("certificate for " + d.ToString() + " does not verify");
        return r;
      }
    }
  }
  r.detail = "cells: " + std::to_string(r.checked) +
             ", injective: " + std::to_string(injective) +
             ", certificates: " + std::to_string(certificates);
  return r;
}

SuiteResult VerifyGantmakherKrein(int n, int k, uint64_t seed,
                                  int instances) {
  CheckType(n, k);
  SuiteResult r;
  std::mt19937_64 rng(seed);
  for (int inst = 0; inst < instances; ++inst) {
    const RationalVector t = RandomVandermondeNodes(n, rng);
    const Subspace w = VandermondeSubspace(t, k + 1);
    if (!IsTotallyPositiveSubspace(w)) {
      r.Fail("Vandermonde subspace is not totally positive");
      return r;
    }
    for (int s = 0; s < 4; ++s) {
      ++r.checked;
      const SignVector sv = SignOf(RandomVectorIn(w, rng));
      if (VarBar(sv) > k) {
        r.Fail("vector " + sv.ToString() + " of W has varbar > k");
        return r;
      }
    }
    const Subspace kernel = w.OrthogonalComplement();
    if (kernel.dim() == 0) continue;
    for (int s = 0; s < 4; ++s) {
      ++r.checked;
      const SignVector sv = SignOf(RandomVectorIn(kernel, rng));
      if (Var(sv) < k + 1) {
        r.Fail("kernel vector " + sv.ToString() + " has var < k + 1");
        return r;
      }
    }
  }
  for (const SignVector& v : AllSignVectors(n)) {
    if (v.IsZero()) continue;
    ++r.checked;
    if (Var(v) + VarBar(Alt(v)) != n - 1) {
      r.Fail("var(v) + varbar(alt v) != n - 1 at " + v.ToString());
      return r;
    }
  }
  r.detail = "instances: " + std::to_string(instances);
  return r;
}

SuiteResult VerifyFVector(int n, int k) {
  CheckType(n, k);
  SuiteResult r;
  const std::vector<int64_t> coeffs = FPolynomial(n, k);
  r.detail = FormatPolynomial(coeffs);
  std::vector<int64_t> graded(k + 1, 0);
  for (const LeDiagram& d : EnumerateFamily(n, k, DiagramFamily::kDBar)) {
    ++r.checked;
    ++graded[d.NumPluses()];
  }
  if (graded != coeffs) {
    r.Fail("graded count of closed diagrams differs from the closed form");
    return r;
  }
  if (k == 0) return r;
  const CyclicArrangement a = VandermondeArrangement(Nodes(n), k);
  const std::vector<Face> faces = EnumerateFaces(a);
  r.checked += static_cast<int64_t>(faces.size());
  if (FVector(faces, k, true) != coeffs) {
    r.Fail("bounded f-vector of the arrangement differs from the closed form");
    return r;
  }
  std::set<SignVector> bounded;
  for (const Face& f : faces) {
    if (f.bounded) bounded.insert(AltNormalize(f.label));
  }
  const std::vector<SignVector> expected = EnumerateSignSet(n, k, true);
  if (bounded != std::set<SignVector>(expected.begin(), expected.end())) {
    r.Fail("bounded face labels differ from the closed sign set");
    return r;
  }
  return r;
}

}  // namespace amplikit
