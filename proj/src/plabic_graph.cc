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

#include "amplikit/plabic_graph.h"

#include <algorithm>
#include <bit>
#include <cassert>
#include <functional>
#include <map>
#include <sstream>

#include "amplikit/errors.h"

namespace amplikit {

PlabicGraph::PlabicGraph(int n) : n_(n) {
  for (int i = 1; i <= n; ++i) {
    PlabicVertex v;
    v.label = i;
    vertices_.push_back(v);
  }
}

int PlabicGraph::AddInternalVertex(VertexColor color) {
  assert(color != VertexColor::kBoundary);
  PlabicVertex v;
  v.color = color;
  vertices_.push_back(v);
  return static_cast<int>(vertices_.size()) - 1;
}

int PlabicGraph::AddEdge(int tail, int head) {
  edges_.push_back({tail, head});
  dead_edge_.push_back(false);
  const int e = static_cast<int>(edges_.size()) - 1;
  vertices_[tail].edges.push_back(e);
  vertices_[head].edges.push_back(e);
  return e;
}

int PlabicGraph::Other(int edge, int vertex) const {
  const PlabicEdge& e = edges_[edge];
  return e.tail == vertex ? e.head : e.tail;
}

void PlabicGraph::ContractDegreeTwo() {
  for (int v = n_; v < static_cast<int>(vertices_.size()); ++v) {
    PlabicVertex& pv = vertices_[v];
    if (pv.color == VertexColor::kBoundary || pv.edges.size() != 2) continue;
    const int e_in = edges_[pv.edges[0]].head == v ? pv.edges[0] : pv.edges[1];
    const int e_out = e_in == pv.edges[0] ? pv.edges[1] : pv.edges[0];
    // Degree-two vertices sit on a directed path; keep e_in, reroute it.
    assert(edges_[e_out].tail == v);
    const int next = edges_[e_out].head;
    edges_[e_in].head = next;
    for (int& slot : vertices_[next].edges) {
      if (slot == e_out) slot = e_in;
    }
    dead_edge_[e_out] = true;
    pv.edges.clear();
    pv.color = VertexColor::kBoundary;  // Marks the vertex as removed.
    pv.label = -1;
  }
  // Compact vertex and edge numbering.
  std::vector<int> vmap(vertices_.size(), -1);
  std::vector<PlabicVertex> vs;
  for (size_t v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v].label == -1) continue;
    vmap[v] = static_cast<int>(vs.size());
    vs.push_back(vertices_[v]);
  }
  std::vector<int> emap(edges_.size(), -1);
  std::vector<PlabicEdge> es;
  for (size_t e = 0; e < edges_.size(); ++e) {
    if (dead_edge_[e]) continue;
    emap[e] = static_cast<int>(es.size());
    es.push_back({vmap[edges_[e].tail], vmap[edges_[e].head]});
  }
  for (PlabicVertex& v : vs) {
    for (int& e : v.edges) e = emap[e];
  }
  vertices_ = std::move(vs);
  edges_ = std::move(es);
  dead_edge_.assign(edges_.size(), false);
}

std::string PlabicGraph::ToDot() const {
  std::ostringstream out;
  out << "graph plabic {\n";
  for (size_t v = 0; v < vertices_.size(); ++v) {
    const PlabicVertex& pv = vertices_[v];
    out << "  v" << v << " [";
    switch (pv.color) {
      case VertexColor::kBoundary:
        out << "shape=plaintext, label=\"" << pv.label << "\"";
        break;
      case VertexColor::kBlack:
        out << "shape=circle, style=filled, fillcolor=black, label=\"\"";
        break;
      case VertexColor::kWhite:
        out << "shape=circle, label=\"\"";
        break;
    }
    out << "];\n";
  }
  for (const PlabicEdge& e : edges_) {
    out << "  v" << e.tail << " -- v" << e.head << ";\n";
  }
  out << "}\n";
  return out.str();
}

PlabicGraph LeToPlabic(const LeDiagram& d) {
  const int k = d.k();
  const int width = d.width();
  PlabicGraph g(d.n());
  // Compass slots for the rotation system, clockwise from north.
  enum Slot { kN = 0, kNE = 1, kE = 2, kS = 4, kSW = 5, kW = 6 };
  std::map<std::pair<int, int>, int> black, white;
  std::vector<std::map<int, int>> slots;  // vertex -> (slot -> edge)
  auto ensure = [&](int v) {
    if (static_cast<int>(slots.size()) <= v) slots.resize(v + 1);
  };
  auto link = [&](int tail, int tail_slot, int head, int head_slot) {
    const int e = static_cast<int>(g.edges().size());
    g.AddEdge(tail, head);
    ensure(std::max(tail, head));
    slots[tail][tail_slot] = e;
    slots[head][head_slot] = e;
  };
  for (int r = 1; r <= k; ++r) {
    for (int c = 1; c <= d.RowLength(r); ++c) {
      if (!d.Plus(r, c)) continue;
      black[{r, c}] = g.AddInternalVertex(VertexColor::kBlack);
      white[{r, c}] = g.AddInternalVertex(VertexColor::kWhite);
      link(black[{r, c}], kSW, white[{r, c}], kNE);
    }
  }
  for (int r = 1; r <= k; ++r) {
    const int boundary = g.BoundaryVertex(d.VerticalLabel(r));
    int east = -1;  // Column of the + to the east of the current one.
    for (int c = d.RowLength(r); c >= 1; --c) {
      if (!d.Plus(r, c)) continue;
      if (east < 0) {
        link(boundary, kW, black[{r, c}], kE);
      } else {
        link(white[{r, east}], kW, black[{r, c}], kE);
      }
      east = c;
    }
    if (east < 0) {
      const int lollipop = g.AddInternalVertex(VertexColor::kWhite);
      link(boundary, kW, lollipop, kE);
    }
  }
  for (int c = 1; c <= width; ++c) {
    const int boundary = g.BoundaryVertex(d.HorizontalLabel(c));
    int above = -1;
    for (int r = 1; r <= d.ColumnHeight(c); ++r) {
      if (!d.Plus(r, c)) continue;
      if (above >= 0) link(white[{above, c}], kS, black[{r, c}], kN);
      above = r;
    }
    if (above >= 0) {
      link(white[{above, c}], kS, boundary, kN);
    } else {
      const int lollipop = g.AddInternalVertex(VertexColor::kBlack);
      link(lollipop, kS, boundary, kN);
    }
  }
  for (size_t v = 0; v < g.vertices().size(); ++v) {
    ensure(static_cast<int>(v));
    std::vector<int> order;
    for (const auto& [slot, e] : slots[v]) order.push_back(e);
    g.mutable_vertices()[v].edges = order;
  }
  g.ContractDegreeTwo();
  return g;
}

DecoratedPermutation TripPermutation(const PlabicGraph& g) {
  const int n = g.n();
  std::vector<int> images(n);
  std::vector<int> white;
  for (int i = 1; i <= n; ++i) {
    const int start = g.BoundaryVertex(i);
    CheckArgument(g.vertices()[start].edges.size() == 1,
                  "boundary vertices must have degree one");
    int edge = g.vertices()[start].edges[0];
    int cur = g.Other(edge, start);
    int last_internal_color = -1;
    size_t steps = 0;
    while (g.vertices()[cur].color != VertexColor::kBoundary) {
      const PlabicVertex& v = g.vertices()[cur];
      const int deg = static_cast<int>(v.edges.size());
      const int pos = static_cast<int>(
          std::find(v.edges.begin(), v.edges.end(), edge) - v.edges.begin());
      const int next = v.color == VertexColor::kBlack
                           ? v.edges[(pos - 1 + deg) % deg]
                           : v.edges[(pos + 1) % deg];
      last_internal_color = static_cast<int>(v.color);
      cur = g.Other(next, cur);
      edge = next;
      if (++steps > 4 * g.edges().size() + 4) {
        throw InvalidArgument("trip does not terminate");
      }
    }
    const int end = g.vertices()[cur].label;
    images[i - 1] = end;
    if (end == i && last_internal_color == static_cast<int>(VertexColor::kWhite)) {
      white.push_back(i);
    }
  }
  return DecoratedPermutation(std::move(images), std::move(white));
}

namespace {

SubsetMask SourcesOf(const PlabicGraph& g, const std::vector<bool>& forward) {
  SubsetMask sources = 0;
  for (int i = 1; i <= g.n(); ++i) {
    const int b = g.BoundaryVertex(i);
    for (int e : g.vertices()[b].edges) {
      const int tail = forward[e] ? g.edges()[e].tail : g.edges()[e].head;
      if (tail == b) sources |= SubsetMask{1} << (i - 1);
    }
  }
  return sources;
}

}  // namespace

bool IsPerfectOrientation(const PlabicGraph& g,
                          const std::vector<bool>& forward) {
  for (size_t v = 0; v < g.vertices().size(); ++v) {
    const PlabicVertex& pv = g.vertices()[v];
    if (pv.color == VertexColor::kBoundary) continue;
    int out = 0, in = 0;
    for (int e : pv.edges) {
      const int tail = forward[e] ? g.edges()[e].tail : g.edges()[e].head;
      if (tail == static_cast<int>(v)) {
        ++out;
      } else {
        ++in;
      }
    }
    if (pv.color == VertexColor::kBlack && out != 1) return false;
    if (pv.color == VertexColor::kWhite && in != 1) return false;
  }
  return true;
}

PerfectOrientation StoredOrientation(const PlabicGraph& g) {
  PerfectOrientation o;
  o.forward.assign(g.edges().size(), true);
  o.sources = SourcesOf(g, o.forward);
  return o;
}

std::vector<PerfectOrientation> AllPerfectOrientations(const PlabicGraph& g) {
  const int num_edges = static_cast<int>(g.edges().size());
  CheckScale(num_edges <= 64, "too many edges for orientation enumeration");
  std::vector<int> internal;
  for (size_t v = 0; v < g.vertices().size(); ++v) {
    if (g.vertices()[v].color != VertexColor::kBoundary) {
      internal.push_back(static_cast<int>(v));
    }
  }
  // -1 unassigned, 0 reversed, 1 forward.
  std::vector<int> dir(num_edges, -1);
  std::vector<PerfectOrientation> out;
  std::vector<int> free_edges;
  std::function<void(size_t)> assign_free = [&](size_t i) {
    if (i == free_edges.size()) {
      PerfectOrientation o;
      o.forward.resize(num_edges);
      for (int e = 0; e < num_edges; ++e) o.forward[e] = dir[e] == 1;
      o.sources = SourcesOf(g, o.forward);
      out.push_back(std::move(o));
      return;
    }
    for (int d = 0; d < 2; ++d) {
      dir[free_edges[i]] = d;
      assign_free(i + 1);
    }
    dir[free_edges[i]] = -1;
  };
  std::function<void(size_t)> search = [&](size_t i) {
    if (i == internal.size()) {
      free_edges.clear();
      for (int e = 0; e < num_edges; ++e) {
        if (dir[e] < 0) free_edges.push_back(e);
      }
      assign_free(0);
      return;
    }
    const int v = internal[i];
    const PlabicVertex& pv = g.vertices()[v];
    const bool black = pv.color == VertexColor::kBlack;
    for (int special : pv.edges) {
      // Black: special edge leaves v. White: special edge enters v.
      std::vector<int> changed;
      bool ok = true;
      for (int e : pv.edges) {
        const bool out_of_v = (e == special) == black;
        const int want = (g.edges()[e].tail == v) == out_of_v ? 1 : 0;
        if (dir[e] < 0) {
          dir[e] = want;
          changed.push_back(e);
        } else if (dir[e] != want) {
          ok = false;
          break;
        }
      }
      if (ok) search(i + 1);
      for (int e : changed) dir[e] = -1;
    }
  };
  search(0);
  return out;
}

Matroid PositroidFromPlabic(const PlabicGraph& g) {
  std::vector<SubsetMask> bases;
  int rank = -1;
  for (const PerfectOrientation& o : AllPerfectOrientations(g)) {
    bases.push_back(o.sources);
    rank = std::popcount(o.sources);
  }
  CheckArgument(rank >= 0, "plabic graph has no perfect orientation");
  return Matroid(g.n(), rank, std::move(bases));
}

RationalMatrix CellRepresentative(const LeDiagram& d,
                                  const RationalVector& weights) {
  CheckArgument(static_cast<int>(weights.size()) == d.NumPluses(),
                "need one weight per +");
  for (const Rational& w : weights) {
    CheckArgument(w > 0, "weights must be positive");
  }
  const int k = d.k();
  const int n = d.n();
  std::map<std::pair<int, int>, Rational> weight;
  {
    size_t i = 0;
    for (int r = 1; r <= k; ++r) {
      for (int c = 1; c <= d.RowLength(r); ++c) {
        if (d.Plus(r, c)) weight[{r, c}] = weights[i++];
      }
    }
  }
  auto west_of = [&](int r, int c) {
    for (int j = c - 1; j >= 1; --j) {
      if (d.Plus(r, j)) return j;
    }
    return 0;
  };
  auto south_of = [&](int r, int c) {
    for (int i = r + 1; i <= d.ColumnHeight(c); ++i) {
      if (d.Plus(i, c)) return i;
    }
    return 0;
  };
  const std::vector<int> sources = d.VerticalSteps();
  RationalMatrix a(k, n);
  for (int r = 1; r <= k; ++r) {
    const int src = d.VerticalLabel(r);
    a(r - 1, src - 1) = 1;
    int start = 0;
    for (int c = d.RowLength(r); c >= 1 && start == 0; --c) {
      if (d.Plus(r, c)) start = c;
    }
    if (start == 0) continue;
    for (int sink_col = 1; sink_col <= d.width(); ++sink_col) {
      // paths[(r, c)]: weighted paths from + (r, c) to the sink column.
      std::map<std::pair<int, int>, Rational> memo;
      std::function<Rational(int, int)> paths = [&](int pr, int pc) {
        auto it = memo.find({pr, pc});
        if (it != memo.end()) return it->second;
        Rational total = 0;
        if (int w = west_of(pr, pc); w != 0) {
          total += weight[{pr, w}] * paths(pr, w);
        }
        if (int s = south_of(pr, pc); s != 0) {
          total += paths(s, pc);
        } else if (pc == sink_col) {
          total += 1;
        }
        memo[{pr, pc}] = total;
        return total;
      };
      const Rational m = weight[{r, start}] * paths(r, start);
      if (m == 0) continue;
      const int sink = d.HorizontalLabel(sink_col);
      const int lo = std::min(src, sink), hi = std::max(src, sink);
      int between = 0;
      for (int s : sources) {
        if (s > lo && s < hi) ++between;
      }
      a(r - 1, sink - 1) = between % 2 == 0 ? m : Rational(-m);
    }
  }
  return a;
}

RationalMatrix RandomCellRepresentative(const LeDiagram& d,
                                        std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(1, 9);
  RationalVector weights;
  for (int i = 0; i < d.NumPluses(); ++i) {
    const int num = dist(rng);
    weights.push_back(MakeRational(num, dist(rng)));
  }
  return CellRepresentative(d, weights);
}

}  // namespace amplikit
