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

// Plabic graphs built from Le-diagrams, their trip permutations, perfect
// orientations, and the boundary measurement of the Le-network.

#ifndef AMPLIKIT_PLABIC_GRAPH_H_
#define AMPLIKIT_PLABIC_GRAPH_H_

#include <random>
#include <string>
#include <vector>

#include "amplikit/exact_linear.h"
#include "amplikit/le_diagram.h"
#include "amplikit/matroid.h"

namespace amplikit {

enum class VertexColor { kBoundary, kBlack, kWhite };

struct PlabicVertex {
  VertexColor color = VertexColor::kBoundary;
  int label = 0;           // Boundary label 1..n, 0 for internal vertices.
  std::vector<int> edges;  // Incident edges in clockwise order.
};

// Edges are stored tail -> head for the down-left orientation of the graph
// built from a Le-diagram: horizontal edges point west, vertical edges south.
struct PlabicEdge {
  int tail = 0;
  int head = 0;
};

class PlabicGraph {
 public:
  PlabicGraph() = default;
  explicit PlabicGraph(int n);

  int n() const { return n_; }
  // Boundary vertex i has index i-1.
  int BoundaryVertex(int label) const { return label - 1; }
  const std::vector<PlabicVertex>& vertices() const { return vertices_; }
  const std::vector<PlabicEdge>& edges() const { return edges_; }

  int AddInternalVertex(VertexColor color);
  // Appends the edge to both endpoints' rotation lists; callers add edges in
  // clockwise order around each vertex.
  int AddEdge(int tail, int head);
  int Other(int edge, int vertex) const;

  // Splices out internal vertices of degree 2.
  void ContractDegreeTwo();

  std::string ToDot() const;

  // Exposed for construction code.
  std::vector<PlabicVertex>& mutable_vertices() { return vertices_; }

 private:
  int n_ = 0;
  std::vector<PlabicVertex> vertices_;
  std::vector<PlabicEdge> edges_;
  std::vector<bool> dead_edge_;
};

// Hook diagram with local substitutions: each + becomes a black vertex
// (carrying its north and east edges) joined to a white vertex (carrying its
// south and west edges); all-zero rows get white lollipops and all-zero
// columns black lollipops. Degree-two vertices are then contracted.
PlabicGraph LeToPlabic(const LeDiagram& d);

// Trips turn maximally right at black and maximally left at white vertices.
DecoratedPermutation TripPermutation(const PlabicGraph& g);

// forward[e] == true keeps edge e as stored (tail -> head).
struct PerfectOrientation {
  std::vector<bool> forward;
  SubsetMask sources = 0;
};

bool IsPerfectOrientation(const PlabicGraph& g,
                          const std::vector<bool>& forward);
// The stored orientation (down-left for graphs from LeToPlabic).
PerfectOrientation StoredOrientation(const PlabicGraph& g);
std::vector<PerfectOrientation> AllPerfectOrientations(const PlabicGraph& g);

// Bases are the source sets of the perfect orientations.
Matroid PositroidFromPlabic(const PlabicGraph& g);

// Boundary measurement of the Le-network of d with positive weights, one per
// + in reading order; the weight of a + sits on the edge entering it from the
// east. Row i of the k x n result belongs to the i-th source (vertical step)
// and has entry (-1)^s * (sum of path weights) in column j, s counting sources
// strictly between. Source columns form an identity block.
RationalMatrix CellRepresentative(const LeDiagram& d,
                                  const RationalVector& weights);
// Same with random weights p/q, 1 <= p, q <= 9.
RationalMatrix RandomCellRepresentative(const LeDiagram& d, std::mt19937_64& rng);

}  // namespace amplikit

#endif  // AMPLIKIT_PLABIC_GRAPH_H_
