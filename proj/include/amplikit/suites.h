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

// Verification suites: exhaustive or seeded checks of the module invariants
// for one type (n, k). Each stops at the first counterexample.

#ifndef AMPLIKIT_SUITES_H_
#define AMPLIKIT_SUITES_H_

#include <cstdint>
#include <string>
#include <vector>

namespace amplikit {

struct SuiteResult {
  bool passed = true;
  int64_t checked = 0;         // Items examined.
  std::string counterexample;  // First failure, empty when passed.
  std::string detail;          // Short summary such as counts.

  void Fail(const std::string& what) {
    if (passed) counterexample = what;
    passed = false;
  }
};

// OmegaDS and OmegaDM are mutually consistent bijections and order
// isomorphisms, and sigma(OmegaDM(D)) == OmegaDS(D).
SuiteResult VerifyBijections(int n, int k);

// Every open sign vector is hit by exactly one maximal diagram; the maximal
// diagrams are the BCFW cells; their number is C(n-1, k); the closed family
// covers the closed sign set.
SuiteResult VerifyTriangulation(int n, int k);

// The four combinatorial adjacency conditions agree on all pairs of maximal
// diagrams; the geometric one is added when geometric is set.
SuiteResult VerifyAdjacency(int n, int k, bool geometric);

// The four combinatorial interior conditions agree on the closed family;
// the geometric one is added when geometric is set.
SuiteResult VerifyBoundary(int n, int k, bool geometric);

// Images of cells, over every Le-diagram of type (k, n): dimension equals the
// number of rows with a +, injective images equal OmegaDS(Slide(D)), sampled
// points land in the claimed strata, and up to max_certificates diagrams
// outside the closed L family get an exactly verified certificate.
SuiteResult VerifyImages(int n, int k, uint64_t seed, int samples,
                         int max_certificates);

// Gantmakher-Krein sampling on random Vandermonde instances and exhaustive
// alt duality on {-,0,+}^n.
SuiteResult VerifyGantmakherKrein(int n, int k, uint64_t seed, int instances);

// Closed form, graded count of the closed family, and bounded f-vector of
// the Vandermonde arrangement agree; detail holds the polynomial.
SuiteResult VerifyFVector(int n, int k);

// Seed for item (n, k) of a run, independent of scheduling.
uint64_t ItemSeed(uint64_t seed, int n, int k);

}  // namespace amplikit

#endif  // AMPLIKIT_SUITES_H_
