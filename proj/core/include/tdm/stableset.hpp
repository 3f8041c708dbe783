#pragma once

#include "tdm/graph.hpp"
#include "tdm/matrix.hpp"
#include "tdm/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace tdm {

// Vertex weights w and/or edge costs c over a simple graph; an empty vector
// means the quantity is absent.
struct StableSetInstance {
  Graph g;
  RVec w;
  RVec c;

  void validate() const;
  // Instance with costs c and the weights they induce.
  static StableSetInstance from_costs(Graph g, RVec c);
};

// w(v) = sum of c over the edges at v.
RVec induced_weights(const Graph& g, const RVec& c);

// Edge-by-vertex incidence matrix (one row per edge).
RationalMatrix incidence_matrix(const Graph& g);

using VertexSet = std::vector<int>;  // sorted

bool is_stable(const Graph& g, const VertexSet& s);
std::uint64_t to_mask(const VertexSet& s);
VertexSet from_mask(std::uint64_t m);

// Edges with no endpoint in s.
std::vector<int> slack_edges(const Graph& g, const VertexSet& s);

enum class StableMode { weight, cost };

struct StableSetResult {
  VertexSet set;
  Rational value;  // w(S) in weight mode, c(S) in cost mode
};

// Plain enumeration; ties go to the first set in enumeration order.
StableSetResult brute_force_stable_set(const StableSetInstance& inst, StableMode mode, int cap = 24);

// Branch and bound on bitmasks for up to 64 vertices.  Negative weights are
// allowed (such vertices are never taken).
StableSetResult max_weight_stable_set(const Graph& g, const RVec& w);

// Maximum weight via the LP over x_u + x_v <= 1, 0 <= x <= 1.
StableSetResult solve_bipartite(const StableSetInstance& inst);

// Minimum c-cost stable set, computed as c(E) - max w_c(S).
StableSetResult min_cost_bipartite(const Graph& g, const RVec& c);

inline constexpr int kOcpCap = 40;
inline constexpr int kOctCap = 40;

// Induced odd cycles as vertex masks, each once.
std::vector<std::uint64_t> induced_odd_cycles(const Graph& g, std::uint64_t mask, std::size_t limit = 2000000);

int ocp_brute(const Graph& g, int cap = kOcpCap);
int oct_brute(const Graph& g, int cap = kOctCap);

struct ResilienceReport {
  bool resilient = true;
  int ocp = 0;
  VertexSet witness;  // every component of G - witness has smaller ocp
};

ResilienceReport resilience_check(const Graph& g, int rho, int cap = kOcpCap);

struct EdgeInducedReduction {
  RVec w_prime;
  VertexSet s0, s1;
  RVec c;
  RVec x_star;
};

EdgeInducedReduction edge_induced_reduce(const Graph& g, const RVec& w);

// (S \ S0) u S1
VertexSet lift_edge_induced(const EdgeInducedReduction& r, const VertexSet& s);

// c(sigma(S)); throws PreconditionError when S is not stable.
Rational slack_cost(const StableSetInstance& inst, const VertexSet& s);

// w(S) + c(S) == c(E) with w induced by c.
bool slack_identity_holds(const StableSetInstance& inst, const VertexSet& s);

}  // namespace tdm
