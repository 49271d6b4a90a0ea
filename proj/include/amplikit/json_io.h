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

// JSON encodings of the library's objects. Rationals are always strings
// "p/q"; parsing also accepts plain integers.
//
//   diagram      {"k": 2, "n": 5, "shape": [2, 1], "fill": ["0+", "+"]}
//   permutation  {"images": [...], "white_fixed": [...], "pretty": "..."}
//   matroid      {"n": 4, "k": 2, "bases": [[1, 2], ...]}
//   code         {"n": 8, "intervals": [[1, 3], ...], "C": [...]}
//   matrix       [["1/1", "0/1"], ...]

#ifndef AMPLIKIT_JSON_IO_H_
#define AMPLIKIT_JSON_IO_H_

#include <json.hpp>

#include "amplikit/amplituhedron.h"
#include "amplikit/arrangement.h"
#include "amplikit/exact_linear.h"
#include "amplikit/le_diagram.h"
#include "amplikit/matroid.h"
#include "amplikit/positroid.h"

namespace amplikit {

using Json = nlohmann::ordered_json;

Json RationalToJson(const Rational& q);
Rational RationalFromJson(const Json& j);
Json VectorToJson(const RationalVector& v);
RationalVector VectorFromJson(const Json& j);
Json MatrixToJson(const RationalMatrix& m);
RationalMatrix MatrixFromJson(const Json& j);

Json DiagramToJson(const LeDiagram& d);
// "shape" is optional; when present it must match the fill.
LeDiagram DiagramFromJson(const Json& j);

Json PermutationToJson(const DecoratedPermutation& pi);
DecoratedPermutation PermutationFromJson(const Json& j);

Json MatroidToJson(const Matroid& m);
Matroid MatroidFromJson(const Json& j);

Json CodeToJson(const IntervalPartitionCode& code);

Json FaceToJson(const Face& f);
Json ArrangementToJson(const CyclicArrangement& a);

Json CellImageToJson(const LeDiagram& d, const CellImage& image);

// Strata table, adjacency edges between maximal cells, interior flags and
// the f-polynomial of B_{n,k,1}.
Json ModelReport(const AmplituhedronModel& model);

}  // namespace amplikit

#endif  // AMPLIKIT_JSON_IO_H_
