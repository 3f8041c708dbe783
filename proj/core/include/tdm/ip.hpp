#pragma once

#include "tdm/lp.hpp"
#include "tdm/matrix.hpp"
#include "tdm/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tdm {

// max w^T x  s.t.  A x <= b,  lower <= x <= upper,  x integral.
struct IPInstance {
  RationalMatrix A;
  RVec b;
  RVec w;
  std::vector<OptQ> lower;  // empty, or one entry per variable (integral when set)
  std::vector<OptQ> upper;

  std::size_t n() const { return A.cols(); }
  std::size_t m() const { return A.rows(); }
  void validate() const;

  LPProblem relaxation() const;
  bool feasible(const std::vector<Integer>& x) const;
  Rational value(const std::vector<Integer>& x) const;
  OptQ lo(std::size_t j) const { return lower.empty() ? OptQ{} : lower[j]; }
  OptQ hi(std::size_t j) const { return upper.empty() ? OptQ{} : upper[j]; }
  bool two_per_row() const;
  bool two_per_column() const;
};

enum class IPStatus { optimal, infeasible, unbounded };

struct IPResult {
  IPStatus status = IPStatus::infeasible;
  std::vector<Integer> x;
  Rational objective;
  std::size_t guesses_explored = 0;
};

const char* to_string(IPStatus s);

RVec to_rvec(const std::vector<Integer>& x);

}  // namespace tdm
