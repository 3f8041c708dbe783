#pragma once

#include "tdm/graph.hpp"
#include "tdm/stableset.hpp"

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace tdm {

// G u W on vertices 0..n-1.  V(W) is the set of endpoints of w_edges; the
// two edge lists must be disjoint.
struct GadgetInstance {
  int n = 0;
  std::vector<int> g_vertices;
  std::vector<Edge> g_edges;
  RVec g_cost;
  std::vector<Edge> w_edges;
  RVec w_cost;

  void validate() const;
  // Edges of G first, then those of W.
  Graph union_graph() const;
  RVec union_cost() const;
};

enum class GadgetCase { w1, w2_even, w2_odd, w3_even, w3_mixed };

const char* to_string(GadgetCase c);

struct GadgetRecord {
  GadgetCase kind = GadgetCase::w1;
  std::vector<int> omega;      // union ids, in gadget order v1, v2, v3
  std::vector<int> w_vertices;  // union ids of this component of W
  std::vector<int> virtual_vertices;  // G+ ids
  std::vector<int> virtual_edges;     // G+ edge ids, copied boundary edges included
  // c_W(S_I) for I given as a bitmask over omega; infeasible patterns carry c(E(W)) + 1.
  std::array<Rational, 8> table;
  std::array<std::optional<VertexSet>, 8> best;  // S_I, union ids
};

struct GadgetResult {
  Graph gplus;
  RVec cplus;
  std::vector<int> to_union;    // G+ vertex -> union vertex, -1 for virtual ones
  std::vector<int> from_union;  // union vertex -> G+ vertex, -1 for interior W vertices
  std::vector<GadgetRecord> records;

  // Stable set of G+ -> stable set of G u W with c(S) <= c+(S').
  VertexSet map_back(const VertexSet& sp) const;
  // Stable set of G u W -> stable set of G+ with c+(S') <= c(S).
  VertexSet map_forward(const VertexSet& s) const;
};

// One gadget per connected component of W.
GadgetResult gadget_replace(const GadgetInstance& inst);

// Component exchange on stable sets S1, S2 of W; see the swap of the
// {v1, v2}-intersections in the returned pair.
std::pair<VertexSet, VertexSet> exchange_split(const Graph& w, int v1, int v2, const VertexSet& s1,
                                               const VertexSet& s2);

}  // namespace tdm
