#pragma once

#include "tdm/graph.hpp"
#include "tdm/slack.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace tdm {

// Rotation system with signatures.  rotation[v] lists the edges at v in
// cyclic order; signature[e] is +1 or -1.
struct EmbeddedGraph {
  Graph g;
  std::vector<std::vector<int>> rotation;
  std::vector<int> signature;

  void validate() const;
};

struct Face {
  std::vector<int> vertices;  // vertices[i] is the tail of edges[i] in the walk
  std::vector<int> edges;
  std::size_t length() const { return edges.size(); }
};

struct FaceTrace {
  std::vector<Face> faces;
  int euler_genus = 0;
  bool orientable = true;
};

FaceTrace trace_faces(const EmbeddedGraph& eg);

// Every cycle has sign product -1 exactly when it is odd.
bool odd_cycles_one_sided(const EmbeddedGraph& eg);

// Arc per primal edge, leaving face tail[e] and entering face head[e].
// tail_pos/head_pos index the occurrence inside the face walk.
struct DualOrientation {
  std::vector<Face> faces;
  std::vector<int> tail, head, tail_pos, head_pos;

  std::size_t nodes() const { return faces.size(); }
  // +1 leaving, -1 entering, per position of the face walk.
  std::vector<int> pattern(int f) const;
  bool is_circulation(const SlackVec& y) const;
};

DualOrientation alternating_orientation(const EmbeddedGraph& eg);
bool is_alternating(const DualOrientation& d);

struct HomologyBasis {
  std::vector<int> odd_cycle;                // closed vertex walk
  std::vector<std::vector<int>> even_walks;  // closed vertex walks
  int euler_genus = 0;
};

HomologyBasis homology_basis(const EmbeddedGraph& eg);

struct HomologyClass {
  int parity = 0;
  std::vector<std::int64_t> coords;
  bool operator==(const HomologyClass&) const = default;
};

HomologyClass omega(const Graph& g, const SlackVec& y, const HomologyBasis& basis);

struct DualReport {
  std::vector<SlackVec> slack_vectors;  // 0/1 members of Y(G)
  std::vector<SlackVec> circulations;   // 0/1 circulations with omega = (1, 0)
  bool equal = false;
  int euler_genus = 0;
  std::size_t basis_walks = 0;
};

DualReport verify_dual_representation(const EmbeddedGraph& eg, std::size_t edge_cap = 14);

// Per-node matching of entering and leaving support positions; first is the
// entering position, second the leaving one.
struct CrossFree {
  std::vector<std::vector<std::pair<int, int>>> matching;
  std::vector<std::vector<int>> cycles;  // arcs (edge ids) in traversal order
};

CrossFree crossfree_decompose(const DualOrientation& d, const SlackVec& y);

// True when no two pairs cross in the cyclic order of a walk of length len.
bool matching_is_crossfree(const std::vector<std::pair<int, int>>& pairs, int len);

}  // namespace tdm
