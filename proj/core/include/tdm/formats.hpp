#pragma once

#include "tdm/graph.hpp"
#include "tdm/ip.hpp"
#include "tdm/surface.hpp"

#include <iosfwd>
#include <string>

namespace tdm {

// IP m n / m rows / RHS / OBJ / [LB] / [UB]; "inf" and "-inf" mark free bounds.
IPInstance parse_ip(std::istream& in);
std::string write_ip(const IPInstance& ip);

// GRAPH n m / E u v [cost] / VW v w.  Missing costs default to zero, missing
// vertex weights leave the weight vector empty.
struct GraphFile {
  Graph g;
  RVec cost;      // per edge
  RVec vweight;   // per vertex, or empty
  bool has_cost = false;
};

GraphFile parse_graph(std::istream& in);
std::string write_graph(const GraphFile& gf);
std::string write_graph(const Graph& g);

// EMBED n m / ROT v: e ... / SIG e: +1|-1.  Edge endpoints are read off the
// rotations.
EmbeddedGraph parse_embed(std::istream& in);
std::string write_embed(const EmbeddedGraph& eg);

IPInstance load_ip(const std::string& path);
GraphFile load_graph(const std::string& path);
EmbeddedGraph load_embed(const std::string& path);

// {"status", "objective", "solution", "guesses_explored"}; rationals as "p/q".
std::string ip_result_to_json(const IPResult& r, int indent = 2);
IPResult ip_result_from_json(const std::string& text);

}  // namespace tdm
