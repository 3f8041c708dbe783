#pragma once

#include "tdm/graph.hpp"
#include "tdm/ip.hpp"
#include "tdm/stableset.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace tdm {

struct TraceRecord {
  enum class Kind { guess_fix, bound_normalize, aux_var_pair, equation_lift, translate, vertex_fix, vertex_delete };
  Kind kind;
  std::vector<std::int64_t> args;
  std::string detail;
};

const char* to_string(TraceRecord::Kind k);

using ReductionTrace = std::vector<TraceRecord>;

// max w^T x s.t. x_u + x_v <= rhs_e (or == rhs_e when is_eq[e]), l <= x <= u.
struct EdgeConstraintIP {
  Graph g;
  std::vector<char> is_eq;
  std::vector<std::int64_t> rhs;
  std::vector<std::int64_t> lower, upper;
  RVec w;
  std::vector<int> origin;  // index into the +-1 system, -1 for auxiliary variables

  bool feasible(const std::vector<std::int64_t>& x, bool with_equations = true) const;
  Rational value(const std::vector<std::int64_t>& x) const;
  IPInstance to_ip() const;  // equations as two inequalities
};

// The integer box {z : |x_bar_j - z| <= n * delta} intersected with the bounds of ip.
std::vector<std::pair<std::int64_t, std::int64_t>> proximity_box(const IPInstance& ip, const RVec& x_bar,
                                                                 std::int64_t delta);

// Calls f(values, sub) for every guess on J in lexicographic order; sub is ip
// with x_J fixed through its bounds and every other variable boxed.  Stops
// early when f returns false.  Returns the number of guesses produced.
std::size_t enumerate_proximity_guesses(const IPInstance& ip, const std::vector<std::size_t>& J, const RVec& x_bar,
                                        std::int64_t delta,
                                        const std::function<bool(const std::vector<std::int64_t>&, const IPInstance&)>& f);

// Rows with all coefficients in {-1, 0, 1}, at most two per row, integral rhs and finite bounds.
struct PmSystem {
  bool infeasible = false;
  std::vector<std::size_t> vars;                    // original index per remaining variable
  std::vector<std::optional<std::int64_t>> fixed;  // per original variable
  IPInstance ip;

  std::vector<Integer> assemble(const std::vector<std::int64_t>& values) const;
};

// Substitutes fixed variables (lower == upper) and turns single-variable rows into bounds.
PmSystem normalize_single_variable_rows(const IPInstance& sub, ReductionTrace* trace = nullptr);

EdgeConstraintIP introduce_aux_variables(const IPInstance& pm, ReductionTrace* trace = nullptr);

struct Elimination {
  EdgeConstraintIP relaxed;  // no equations, objective g
  Rational mu, nu;
  std::vector<int> eq_edges;
};

Elimination eliminate_equations(const EdgeConstraintIP& e, ReductionTrace* trace = nullptr);

struct StableReduction {
  bool infeasible = false;
  Graph h;
  RVec weights;
  std::vector<int> vertex_of;             // H vertex -> vertex of the edge IP
  std::vector<std::int64_t> t;            // translation
  std::vector<signed char> fixed;         // -1 free, else 0 / 1 (translated value)
  RVec lp_x;

  std::vector<std::int64_t> lift(const VertexSet& s) const;
};

// Expects no equations.
StableReduction reduce_to_stable_set(const EdgeConstraintIP& e, ReductionTrace* trace = nullptr);

using StableSolver = std::function<StableSetResult(const Graph&, const RVec&)>;

struct PipelineResult {
  IPResult result;
  ReductionTrace trace;  // of the guess that produced the optimum
  std::vector<std::size_t> J;
  std::size_t guesses_pruned = 0;
  RVec lp_x;
};

PipelineResult solve_two_per_row(const IPInstance& ip, std::int64_t delta, const StableSolver& solver = {});

}  // namespace tdm
