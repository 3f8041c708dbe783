#include "tdm/colpipe.hpp"

#include "tdm/errors.hpp"
#include "tdm/lp.hpp"
#include "tdm/oracle.hpp"
#include "tdm/rowpipe.hpp"

#include <algorithm>
#include <stdexcept>

namespace tdm {

ColumnGrouping group_columns(const RationalMatrix& a, const std::vector<std::size_t>& I) {
  ColumnGrouping cg;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    RVec sig;
    bool zero = true;
    for (auto i : I) {
      sig.push_back(a(i, j));
      if (a(i, j) != 0) zero = false;
    }
    if (zero) continue;
    auto it = std::find(cg.signature.begin(), cg.signature.end(), sig);
    if (it == cg.signature.end()) {
      cg.signature.push_back(sig);
      cg.groups.push_back({j});
    } else {
      cg.groups[it - cg.signature.begin()].push_back(j);
    }
  }
  return cg;
}

IPInstance build_base_ip(const IPInstance& ip, const std::vector<std::size_t>& I, const ColumnGrouping& grouping,
                         const std::vector<std::int64_t>& sums) {
  if (sums.size() != grouping.groups.size()) throw std::invalid_argument("build_base_ip: one sum per group expected");
  const std::size_t n = ip.n();
  std::vector<int> uses(n, 0);
  std::vector<RVec> rows;
  RVec b;
  for (std::size_t t = 0; t < grouping.groups.size(); ++t) {
    RVec r(n, 0);
    for (auto j : grouping.groups[t]) {
      r[j] = 1;
      ++uses[j];
    }
    rows.push_back(r);
    b.emplace_back(sums[t]);
    for (auto& q : r) q = -q;
    rows.push_back(r);
    b.emplace_back(-sums[t]);
  }
  for (std::size_t i = 0; i < ip.m(); ++i) {
    if (std::find(I.begin(), I.end(), i) != I.end()) continue;
    rows.push_back(ip.A.row(i));
    b.push_back(ip.b[i]);
    for (std::size_t j = 0; j < n; ++j)
      if (ip.A(i, j) != 0) ++uses[j];
  }
  for (std::size_t j = 0; j < n; ++j)
    if (uses[j] > 2)
      throw PreconditionError("build_base_ip: variable " + std::to_string(j) + " appears in more than two constraints");
  IPInstance base;
  base.A = RationalMatrix::from_rows(rows, n);
  base.b = b;
  base.w = ip.w;
  base.lower = ip.lower;
  base.upper = ip.upper;
  return base;
}

ColumnPipelineResult solve_two_per_column(const IPInstance& ip, std::int64_t delta, const BaseSolver& base) {
  ip.validate();
  if (!ip.A.is_integral()) throw PreconditionError("solve_two_per_column: constraint matrix must be integral");
  if (!ip.two_per_column()) throw PreconditionError("solve_two_per_column: a column has more than two nonzeros");
  if (delta < 1) throw PreconditionError("solve_two_per_column: delta must be positive");
  const BaseSolver solver =
      base ? base : BaseSolver([](const IPInstance& p, std::optional<Rational> c) { return branch_and_bound_ip(p, c); });

  ColumnPipelineResult res;
  auto root = solve(ip.relaxation());
  if (root.status == LPStatus::infeasible) return res;
  if (root.status == LPStatus::unbounded) {
    IPInstance zero = ip;
    zero.w.assign(ip.n(), 0);
    auto feas = solve_two_per_column(zero, delta, solver);
    if (feas.result.status == IPStatus::optimal) {
      res.result.status = IPStatus::unbounded;
      res.result.x = feas.result.x;
    }
    res.result.guesses_explored = feas.result.guesses_explored;
    return res;
  }
  res.lp_x = root.x;
  auto cs = find_column_clearing_sets(ip.A, delta);
  res.I = cs.rows;
  res.J = cs.cols;
  std::sort(res.J.begin(), res.J.end());
  auto box = proximity_box(ip, root.x, delta);
  const std::size_t n = ip.n();

  std::vector<std::size_t> rest;
  for (std::size_t j = 0; j < n; ++j)
    if (!std::binary_search(res.J.begin(), res.J.end(), j)) rest.push_back(j);
  IPInstance reduced;
  reduced.A = ip.A.submatrix([&] {
    std::vector<std::size_t> all(ip.m());
    for (std::size_t i = 0; i < ip.m(); ++i) all[i] = i;
    return all;
  }(), rest);
  for (auto j : rest) {
    reduced.w.push_back(ip.w[j]);
    reduced.lower.emplace_back(box[j].first);
    reduced.upper.emplace_back(box[j].second);
  }
  auto grouping = group_columns(reduced.A, res.I);
  res.groups = grouping.groups.size();
  const std::size_t k = grouping.groups.size();
  std::vector<std::int64_t> slo(k, 0), shi(k, 0);
  for (std::size_t t = 0; t < k; ++t)
    for (auto j : grouping.groups[t]) {
      slo[t] += box[rest[j]].first;
      shi[t] += box[rest[j]].second;
    }
  for (const auto& [lo, hi] : box)
    if (lo > hi) return res;

  bool found = false;
  Rational best;
  std::vector<std::int64_t> z;
  for (auto j : res.J) z.push_back(box[j].first);
  while (true) {
    reduced.b = ip.b;
    Rational fixed_value = 0;
    for (std::size_t q = 0; q < res.J.size(); ++q) fixed_value += ip.w[res.J[q]] * z[q];
    for (std::size_t i = 0; i < ip.m(); ++i)
      for (std::size_t q = 0; q < res.J.size(); ++q) reduced.b[i] -= ip.A(i, res.J[q]) * z[q];

    // I rows depend on the sums only: DFS over s with a partial-sum bound
    std::vector<RVec> minrest(res.I.size(), RVec(k + 1, 0));
    for (std::size_t r = 0; r < res.I.size(); ++r)
      for (std::size_t t = k; t-- > 0;) {
        const Rational& a = grouping.signature[t][r];
        minrest[r][t] = minrest[r][t + 1] + std::min(a * slo[t], a * shi[t]);
      }
    std::vector<std::int64_t> s(k);
    RVec partial(res.I.size(), 0);
    auto dfs = [&](auto&& self, std::size_t t) -> void {
      if (t == k) {
        ++res.result.guesses_explored;
        auto bip = build_base_ip(reduced, res.I, grouping, s);
        auto out = solver(bip, found ? std::optional<Rational>(best - fixed_value) : std::nullopt);
        if (out.status != IPStatus::optimal) return;
        if (found && out.objective + fixed_value <= best) return;
        std::vector<Integer> x(n);
        for (std::size_t q = 0; q < res.J.size(); ++q) x[res.J[q]] = z[q];
        for (std::size_t j = 0; j < rest.size(); ++j) x[rest[j]] = out.x[j];
        if (!ip.feasible(x)) throw std::logic_error("solve_two_per_column: lifted point is infeasible");
        found = true;
        best = ip.value(x);
        res.result.x = x;
        return;
      }
      for (std::int64_t v = slo[t]; v <= shi[t]; ++v) {
        s[t] = v;
        bool ok = true;
        for (std::size_t r = 0; r < res.I.size(); ++r) {
          partial[r] += grouping.signature[t][r] * v;
          if (partial[r] + minrest[r][t + 1] > reduced.b[res.I[r]]) ok = false;
        }
        if (ok) self(self, t + 1);
        for (std::size_t r = 0; r < res.I.size(); ++r) partial[r] -= grouping.signature[t][r] * v;
      }
    };
    // rows of I that touch no group are checked once
    bool ok = true;
    for (std::size_t r = 0; r < res.I.size(); ++r)
      if (k == 0 && reduced.b[res.I[r]] < 0) ok = false;
    if (ok) dfs(dfs, 0);

    std::size_t q = res.J.size();
    while (q > 0 && z[q - 1] == box[res.J[q - 1]].second) --q;
    if (q == 0) break;
    ++z[q - 1];
    for (std::size_t i = q; i < res.J.size(); ++i) z[i] = box[res.J[i]].first;
  }
  if (found) {
    res.result.status = IPStatus::optimal;
    res.result.objective = best;
  }
  return res;
}

}  // namespace tdm
