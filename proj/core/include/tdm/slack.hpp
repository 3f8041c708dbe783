#pragma once

#include "tdm/graph.hpp"
#include "tdm/stableset.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tdm {

using SlackVec = std::vector<std::int64_t>;  // one entry per edge

// y_e = 1 - x_u - x_v for every edge e = uv.
SlackVec slack_of(const Graph& g, const std::vector<std::int64_t>& x);

// Alternating sum y_{e1} - y_{e2} + y_{e3} - ... along a vertex walk.
std::int64_t omega_walk(const Graph& g, const std::vector<int>& walk, const SlackVec& y);

struct Membership {
  bool member = false;
  std::vector<std::int64_t> x;  // witness when member
  std::vector<int> walk;        // closed vertex walk certifying non-membership (empty for y < 0)
  std::string reason;
};

// Decides y in Y(G).  Bipartite components get the witness with x = 0 at
// their smallest vertex.
Membership membership_Y(const Graph& g, const SlackVec& y);

// The unique witness on a connected non-bipartite graph.
std::vector<std::int64_t> recover_x(const Graph& g, const SlackVec& y);

struct Rounding {
  VertexSet set;
  std::vector<int> slack_set;  // sigma(set)
  Rational cost_f;
  Rational cost_y;
  std::size_t iterations = 0;
};

Rounding round_slack_vector(const Graph& g, const RVec& c, const SlackVec& y);

struct Composition {
  bool member = false;
  std::vector<bool> part_member;
  SlackVec y;
  std::vector<std::int64_t> x;  // witness on G when member
  std::vector<int> walk;        // violated closed walk in G otherwise
};

// parts[i] lists edge indices of G forming G_i; part_y[i] gives y on those
// edges in the same order.  G_0 is parts[0]; every other part must be
// connected and bipartite with a connected overlap with G_0.
Composition compose_slack(const Graph& g, const std::vector<std::vector<int>>& parts,
                          const std::vector<SlackVec>& part_y);

// Subgraph spanned by an edge list; map[new vertex] = old vertex.
Graph edge_subgraph(const Graph& g, const std::vector<int>& edges, std::vector<int>* map = nullptr);

}  // namespace tdm
