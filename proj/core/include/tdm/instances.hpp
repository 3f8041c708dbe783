#pragma once

#include "tdm/gadget.hpp"
#include "tdm/graph.hpp"
#include "tdm/ip.hpp"
#include "tdm/stableset.hpp"
#include "tdm/surface.hpp"

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace tdm {

// Thin wrapper so generated bytes do not depend on the standard library's
// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  // Uniform in [lo, hi].
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool chance(int num, int den) { return range(0, den - 1) < num; }

 private:
  std::mt19937_64 eng_;
};

struct Wall {
  Graph g;
  int h = 0;
  std::vector<std::pair<int, int>> coord;  // (column, row), 1-based
  std::vector<std::vector<int>> vertical;    // Q_1..Q_h, bottom to top
  std::vector<std::vector<int>> horizontal;  // P_1..P_h, top to bottom, left to right
  std::vector<std::vector<int>> linking;     // R_1..R_{h-1} for Escher walls
};

Wall elementary_wall(int h);
Wall escher_wall(int h);

Graph random_graph(Rng& rng, int n, int edge_num, int edge_den);
Graph random_connected_graph(Rng& rng, int n, int extra_edges);
// Rejection sampling against ocp_brute.
Graph random_graph_ocp_at_most(Rng& rng, int n, int edge_num, int edge_den, int k);

StableSetInstance random_cost_instance(Rng& rng, int n, int edge_num, int edge_den, int max_cost);

struct IPGenOptions {
  int n = 6;
  int m = 8;
  std::int64_t delta_target = 2;
  std::int64_t box_volume = 200000;  // product of bound widths, roughly
  int max_attempts = 200;
};

// Certified: every variable bounded and max |subdeterminant| <= delta_target.
IPInstance random_two_per_row_ip(std::uint64_t seed, const IPGenOptions& opt);
IPInstance random_two_per_column_ip(std::uint64_t seed, const IPGenOptions& opt);

GadgetInstance random_gadget_instance(Rng& rng, int g_vertices, int w_interior, int boundary, int max_cost);

// K4 in the projective plane: three faces of length four, all edges -1.
EmbeddedGraph k4_projective_fixture();

// Random embedding of a random 2-connected non-bipartite graph whose odd
// cycles are exactly the 1-sided ones and whose faces are cycles.
EmbeddedGraph random_embedded_fixture(Rng& rng, int n, int m, int min_genus, int max_genus);

}  // namespace tdm
