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

#include "amplikit/json_io.h"

#include "amplikit/diagram_families.h"
#include "amplikit/errors.h"

namespace amplikit {

namespace {

Json SubsetToJson(SubsetMask mask) {
  Json out = Json::array();
  for (int e : MaskElements(mask)) out.push_back(e);
  return out;
}

const Json& Field(const Json& j, const char* name) {
  CheckArgument(j.is_object() && j.contains(name),
                std::string("missing field \"") + name + "\"");
  return j.at(name);
}

}  // namespace

Json RationalToJson(const Rational& q) { return FormatRational(q); }

Rational RationalFromJson(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  CheckArgument(j.is_string(), "rationals must be strings or integers");
  return ParseRational(j.get<std::string>());
}

Json VectorToJson(const RationalVector& v) {
  Json out = Json::array();
  for (const Rational& q : v) out.push_back(RationalToJson(q));
  return out;
}

RationalVector VectorFromJson(const Json& j) {
  CheckArgument(j.is_array(), "vectors must be arrays");
  RationalVector out;
  for (const Json& x : j) out.push_back(RationalFromJson(x));
  return out;
}

Json MatrixToJson(const RationalMatrix& m) {
  Json out = Json::array();
  for (int r = 0; r < m.rows(); ++r) out.push_back(VectorToJson(m.Row(r)));
  return out;
}

RationalMatrix MatrixFromJson(const Json& j) {
  CheckArgument(j.is_array() && !j.empty(), "matrices must be nonempty arrays");
  std::vector<RationalVector> rows;
  for (const Json& r : j) rows.push_back(VectorFromJson(r));
  for (const RationalVector& r : rows) {
    CheckArgument(r.size() == rows[0].size(), "ragged matrix");
  }
  return RationalMatrix::FromRows(rows);
}

Json DiagramToJson(const LeDiagram& d) {
  Json shape = Json::array();
  for (int len : d.Shape()) shape.push_back(len);
  return Json{{"k", d.k()}, {"n", d.n()}, {"shape", shape},
              {"fill", d.rows()}};
}

LeDiagram DiagramFromJson(const Json& j) {
  const int k = Field(j, "k").get<int>();
  const int n = Field(j, "n").get<int>();
  std::vector<std::string> rows =
      Field(j, "fill").get<std::vector<std::string>>();
  rows.resize(k);
  LeDiagram d(k, n, rows);
  if (j.contains("shape")) {
    std::vector<int> shape = j.at("shape").get<std::vector<int>>();
    shape.resize(k, 0);
    CheckArgument(shape == d.Shape(), "shape does not match fill");
  }
  return d;
}

Json PermutationToJson(const DecoratedPermutation& pi) {
  return Json{{"images", pi.images()},
              {"white_fixed", pi.white_fixed()},
              {"pretty", pi.ToString()}};
}

DecoratedPermutation PermutationFromJson(const Json& j) {
  std::vector<int> white;
  if (j.contains("white_fixed")) {
    white = j.at("white_fixed").get<std::vector<int>>();
  }
  return DecoratedPermutation(Field(j, "images").get<std::vector<int>>(),
                              white);
}

Json MatroidToJson(const Matroid& m) {
  Json bases = Json::array();
  for (SubsetMask b : m.bases()) bases.push_back(SubsetToJson(b));
  return Json{{"n", m.size()}, {"k", m.rank()}, {"bases", bases}};
}

Matroid MatroidFromJson(const Json& j) {
  const int n = Field(j, "n").get<int>();
  const int k = Field(j, "k").get<int>();
  std::vector<SubsetMask> bases;
  for (const Json& b : Field(j, "bases")) {
    bases.push_back(ElementsMask(b.get<std::vector<int>>()));
  }
  return Matroid(n, k, std::move(bases));
}

Json CodeToJson(const IntervalPartitionCode& code) {
  Json intervals = Json::array();
  for (const auto& [lo, hi] : code.intervals) intervals.push_back({lo, hi});
  return Json{{"n", code.n},
              {"intervals", intervals},
              {"C", SubsetToJson(code.coloops)}};
}

Json FaceToJson(const Face& f) {
  return Json{{"label", f.label.ToString()},
              {"dimension", f.dim},
              {"bounded", f.bounded},
              {"witness", VectorToJson(f.witness)}};
}

Json ArrangementToJson(const CyclicArrangement& a) {
  Json lines = Json::array();
  for (int i = 1; i <= a.n(); ++i) lines.push_back(a.HyperplaneString(i));
  Json normals = Json::array();
  for (const RationalVector& w : a.normals()) normals.push_back(VectorToJson(w));
  return Json{{"n", a.n()},
              {"k", a.k()},
              {"w0", VectorToJson(a.w0())},
              {"normals", normals},
              {"negated_w0", a.negated_w0()},
              {"orientation_vector", VectorToJson(a.orientation_vector())},
              {"hyperplanes", lines}};
}

Json CellImageToJson(const LeDiagram& d, const CellImage& image) {
  Json strata = Json::array();
  for (const SignVector& s : image.strata) strata.push_back(s.ToString());
  Json out{{"diagram", DiagramToJson(d)},
           {"strata", strata},
           {"dimension", image.dimension},
           {"plus_rows", image.plus_rows},
           {"injective", image.injective}};
  if (image.injective) {
    Json slid = Json::array();
    for (const SignVector& s : image.slide_strata) slid.push_back(s.ToString());
    out["slide_strata"] = slid;
    out["matches_slide"] = image.slide_strata == image.strata;
  }
  return out;
}

Json ModelReport(const AmplituhedronModel& model) {
  Json strata = Json::array();
  for (const auto& [label, s] : model.strata()) {
    strata.push_back(Json{{"sign_vector", label.ToString()},
                          {"dimension", s.dimension},
                          {"diagram", s.diagram.ToString()},
                          {"code", CodeToJson(s.code)},
                          {"interior", IsInteriorCell(s.diagram).interior()},
                          {"witness", VectorToJson(s.witness)}});
  }
  const std::vector<LeDiagram> maximal =
      EnumerateFamily(model.n(), model.k(), DiagramFamily::kD);
  Json edges = Json::array();
  for (size_t i = 0; i < maximal.size(); ++i) {
    for (size_t j = i + 1; j < maximal.size(); ++j) {
      const std::optional<LeDiagram> shared =
          AdjacentBySignVectors(maximal[i], maximal[j]);
      if (!shared) continue;
      edges.push_back(Json{{"cells",
                            {OmegaDS(maximal[i]).ToString(),
                             OmegaDS(maximal[j]).ToString()}},
                           {"shared", OmegaDS(*shared).ToString()}});
    }
  }
  return Json{{"n", model.n()},
              {"k", model.k()},
              {"m", model.m()},
              {"Z", MatrixToJson(model.z())},
              {"f_polynomial", FPolynomial(model.n(), model.k())},
              {"f_polynomial_text",
               FormatPolynomial(FPolynomial(model.n(), model.k()))},
              {"strata", strata},
              {"adjacency", edges}};
}

}  // namespace amplikit
