#pragma once

#include "tdm/ip.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace tdm {

// Columns of A grouped by their restriction to the rows I; groups whose
// restriction is zero are dropped.  Groups are ordered by first column.
struct ColumnGrouping {
  std::vector<std::vector<std::size_t>> groups;
  std::vector<RVec> signature;  // A_{I, j} shared by the group
};

ColumnGrouping group_columns(const RationalMatrix& a, const std::vector<std::size_t>& I);

// Group sums as equations (each written as two inequalities, in group order)
// followed by the rows of ip outside I.  Throws PreconditionError when some
// variable ends up in more than two constraints.
IPInstance build_base_ip(const IPInstance& ip, const std::vector<std::size_t>& I, const ColumnGrouping& grouping,
                         const std::vector<std::int64_t>& sums);

using BaseSolver = std::function<IPResult(const IPInstance&, std::optional<Rational> cutoff)>;

struct ColumnPipelineResult {
  IPResult result;
  std::vector<std::size_t> I, J;
  std::size_t groups = 0;
  RVec lp_x;
};

ColumnPipelineResult solve_two_per_column(const IPInstance& ip, std::int64_t delta, const BaseSolver& base = {});

}  // namespace tdm
