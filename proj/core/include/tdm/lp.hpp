#pragma once

#include "tdm/matrix.hpp"
#include "tdm/rational.hpp"

#include <optional>
#include <vector>

namespace tdm {

using OptQ = std::optional<Rational>;

// max w^T x  s.t.  A x <= b,  lower <= x <= upper (missing bound = infinite).
struct LPProblem {
  RationalMatrix A;
  RVec b;
  RVec w;
  std::vector<OptQ> lower;  // empty means all -inf
  std::vector<OptQ> upper;  // empty means all +inf

  std::size_t num_vars() const { return A.cols(); }
  void validate() const;
};

enum class LPStatus { infeasible, unbounded, optimal };

// Dual of the problem above: A^T y + z_upper - z_lower = w, all >= 0.
struct LPDual {
  RVec y;
  RVec z_upper;
  RVec z_lower;
};

struct LPOutcome {
  LPStatus status = LPStatus::infeasible;
  RVec x;
  Rational objective;
  std::optional<LPDual> dual;
  bool is_vertex = false;
  RVec ray;  // improving direction when unbounded
  std::size_t pivots = 0;
};

// Two-phase dense tableau simplex over the rationals with Bland's rule.
LPOutcome solve(const LPProblem& p);

Rational dual_objective(const LPProblem& p, const LPDual& d);

// True when the constraints tight at x (rows and finite bounds) have rank n.
bool is_vertex_of(const LPProblem& p, const RVec& x);

struct HalfIntegral {
  std::vector<Integer> t;  // x - t in {0, 1/2}
  std::vector<std::size_t> zeros;   // V0
  std::vector<std::size_t> halves;  // V*
};

// Throws PreconditionError when x is not half-integral.
HalfIntegral assert_half_integral(const RVec& x);

const char* to_string(LPStatus s);

}  // namespace tdm
