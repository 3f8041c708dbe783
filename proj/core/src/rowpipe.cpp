#include "tdm/rowpipe.hpp"

#include "tdm/errors.hpp"
#include "tdm/lp.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace tdm {

const char* to_string(TraceRecord::Kind k) {
  switch (k) {
    case TraceRecord::Kind::guess_fix: return "GuessFix";
    case TraceRecord::Kind::bound_normalize: return "BoundNormalize";
    case TraceRecord::Kind::aux_var_pair: return "AuxVarPair";
    case TraceRecord::Kind::equation_lift: return "EquationLift";
    case TraceRecord::Kind::translate: return "Translate";
    case TraceRecord::Kind::vertex_fix: return "VertexFix";
    case TraceRecord::Kind::vertex_delete: return "VertexDelete";
  }
  return "?";
}

namespace {

void note(ReductionTrace* tr, TraceRecord::Kind k, std::vector<std::int64_t> args, std::string detail = {}) {
  if (tr) tr->push_back({k, std::move(args), std::move(detail)});
}

}  // namespace

bool EdgeConstraintIP::feasible(const std::vector<std::int64_t>& x, bool with_equations) const {
  if (static_cast<int>(x.size()) != g.n()) return false;
  for (int v = 0; v < g.n(); ++v)
    if (x[v] < lower[v] || x[v] > upper[v]) return false;
  for (int e = 0; e < g.m(); ++e) {
    std::int64_t s = x[g.edge(e).first] + x[g.edge(e).second];
    if (s > rhs[e]) return false;
    if (with_equations && is_eq[e] && s != rhs[e]) return false;
  }
  return true;
}

Rational EdgeConstraintIP::value(const std::vector<std::int64_t>& x) const {
  Rational s = 0;
  for (int v = 0; v < g.n(); ++v)
    if (x[v] != 0) s += w[v] * x[v];
  return s;
}

IPInstance EdgeConstraintIP::to_ip() const {
  std::vector<RVec> rows;
  RVec b;
  for (int e = 0; e < g.m(); ++e) {
    RVec r(g.n(), 0);
    r[g.edge(e).first] = 1;
    r[g.edge(e).second] = 1;
    rows.push_back(r);
    b.emplace_back(rhs[e]);
    if (is_eq[e]) {
      for (auto& q : r) q = -q;
      rows.push_back(r);
      b.emplace_back(-rhs[e]);
    }
  }
  IPInstance ip;
  ip.A = RationalMatrix::from_rows(rows, g.n());
  ip.b = b;
  ip.w = w;
  for (int v = 0; v < g.n(); ++v) {
    ip.lower.emplace_back(lower[v]);
    ip.upper.emplace_back(upper[v]);
  }
  return ip;
}

std::vector<std::pair<std::int64_t, std::int64_t>> proximity_box(const IPInstance& ip, const RVec& x_bar,
                                                                 std::int64_t delta) {
  const Rational r = Rational(static_cast<long>(ip.n())) * delta;
  std::vector<std::pair<std::int64_t, std::int64_t>> box;
  for (std::size_t j = 0; j < ip.n(); ++j) {
    std::int64_t lo = to_i64(ceil_int(x_bar[j] - r)), hi = to_i64(floor_int(x_bar[j] + r));
    if (ip.lo(j)) lo = std::max(lo, to_i64(*ip.lo(j)));
    if (ip.hi(j)) hi = std::min(hi, to_i64(*ip.hi(j)));
    box.emplace_back(lo, hi);
  }
  return box;
}

std::size_t enumerate_proximity_guesses(const IPInstance& ip, const std::vector<std::size_t>& J, const RVec& x_bar,
                                        std::int64_t delta,
                                        const std::function<bool(const std::vector<std::int64_t>&, const IPInstance&)>& f) {
  auto box = proximity_box(ip, x_bar, delta);
  IPInstance sub = ip;
  sub.lower.assign(ip.n(), std::nullopt);
  sub.upper.assign(ip.n(), std::nullopt);
  for (std::size_t j = 0; j < ip.n(); ++j) {
    if (box[j].first > box[j].second) return 0;
    sub.lower[j] = Rational(box[j].first);
    sub.upper[j] = Rational(box[j].second);
  }
  std::vector<std::int64_t> z;
  for (auto j : J) z.push_back(box[j].first);
  std::size_t count = 0;
  while (true) {
    for (std::size_t k = 0; k < J.size(); ++k) sub.lower[J[k]] = sub.upper[J[k]] = Rational(z[k]);
    ++count;
    if (!f(z, sub)) return count;
    std::size_t k = J.size();
    while (k > 0 && z[k - 1] == box[J[k - 1]].second) --k;
    if (k == 0) return count;
    ++z[k - 1];
    for (std::size_t i = k; i < J.size(); ++i) z[i] = box[J[i]].first;
  }
}

std::vector<Integer> PmSystem::assemble(const std::vector<std::int64_t>& values) const {
  std::vector<Integer> x(fixed.size());
  for (std::size_t j = 0; j < fixed.size(); ++j)
    if (fixed[j]) x[j] = *fixed[j];
  for (std::size_t k = 0; k < vars.size(); ++k) x[vars[k]] = values[k];
  return x;
}

PmSystem normalize_single_variable_rows(const IPInstance& sub, ReductionTrace* trace) {
  sub.validate();
  if (!sub.A.is_integral()) throw PreconditionError("normalize: constraint matrix must be integral");
  const std::size_t n = sub.n();
  PmSystem out;
  out.fixed.assign(n, std::nullopt);
  std::vector<std::int64_t> lo(n), hi(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (!sub.lo(j) || !sub.hi(j)) throw PreconditionError("normalize: every variable needs finite bounds");
    lo[j] = to_i64(*sub.lo(j));
    hi[j] = to_i64(*sub.hi(j));
    if (lo[j] > hi[j]) {
      out.infeasible = true;
      return out;
    }
    if (lo[j] == hi[j]) out.fixed[j] = lo[j];
  }
  std::vector<int> pos(n, -1);
  for (std::size_t j = 0; j < n; ++j)
    if (!out.fixed[j]) {
      pos[j] = static_cast<int>(out.vars.size());
      out.vars.push_back(j);
    }

  std::vector<RVec> rows;
  RVec rhs;
  for (std::size_t i = 0; i < sub.m(); ++i) {
    Rational beta = sub.b[i];
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j < n; ++j) {
      if (sub.A(i, j) == 0) continue;
      if (out.fixed[j]) beta -= sub.A(i, j) * *out.fixed[j];
      else nz.push_back(j);
    }
    if (nz.empty()) {
      if (beta < 0) {
        out.infeasible = true;
        return out;
      }
      continue;
    }
    if (nz.size() == 1) {
      const std::size_t j = nz[0];
      const Rational& alpha = sub.A(i, j);
      if (alpha > 0) {
        std::int64_t u = to_i64(floor_int(beta / alpha));
        hi[j] = std::min(hi[j], u);
        note(trace, TraceRecord::Kind::bound_normalize, {static_cast<std::int64_t>(i), static_cast<std::int64_t>(j), u}, "upper");
      } else {
        std::int64_t l = to_i64(ceil_int(beta / alpha));
        lo[j] = std::max(lo[j], l);
        note(trace, TraceRecord::Kind::bound_normalize, {static_cast<std::int64_t>(i), static_cast<std::int64_t>(j), l}, "lower");
      }
      continue;
    }
    if (nz.size() > 2) throw PreconditionError("normalize: row with more than two nonzeros");
    RVec r(out.vars.size(), 0);
    for (auto j : nz) {
      if (abs(sub.A(i, j)) != 1)
        throw PreconditionError("normalize: two-variable row with a coefficient outside {-1, 1}");
      r[pos[j]] = sub.A(i, j);
    }
    rows.push_back(std::move(r));
    rhs.emplace_back(floor_int(beta));
  }
  for (std::size_t j = 0; j < n; ++j)
    if (lo[j] > hi[j]) {
      out.infeasible = true;
      return out;
    }
  out.ip.A = RationalMatrix::from_rows(rows, out.vars.size());
  out.ip.b = rhs;
  for (auto j : out.vars) {
    out.ip.w.push_back(sub.w[j]);
    out.ip.lower.emplace_back(lo[j]);
    out.ip.upper.emplace_back(hi[j]);
  }
  return out;
}

EdgeConstraintIP introduce_aux_variables(const IPInstance& pm, ReductionTrace* trace) {
  pm.validate();
  const std::size_t n = pm.n();
  EdgeConstraintIP e;
  e.g = Graph(static_cast<int>(n));
  for (std::size_t j = 0; j < n; ++j) {
    if (!pm.lo(j) || !pm.hi(j)) throw PreconditionError("introduce_aux_variables: finite bounds required");
    e.lower.push_back(to_i64(*pm.lo(j)));
    e.upper.push_back(to_i64(*pm.hi(j)));
    e.w.push_back(pm.w[j]);
    e.origin.push_back(static_cast<int>(j));
  }
  // (type, i, j) -> (tightest rhs, first row); type 0: x_i + x_j, 1: x_i - x_j, 2: -x_i - x_j
  std::map<std::tuple<int, std::size_t, std::size_t>, std::pair<std::int64_t, std::size_t>> merged;
  std::vector<std::tuple<int, std::size_t, std::size_t>> order;
  for (std::size_t r = 0; r < pm.m(); ++r) {
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j < n; ++j)
      if (pm.A(r, j) != 0) nz.push_back(j);
    if (nz.size() != 2) throw PreconditionError("introduce_aux_variables: every row needs exactly two nonzeros");
    if (!is_integral(pm.b[r])) throw PreconditionError("introduce_aux_variables: rhs must be integral");
    const std::size_t i = nz[0], j = nz[1];
    const Rational &ai = pm.A(r, i), &aj = pm.A(r, j);
    if (abs(ai) != 1 || abs(aj) != 1) throw PreconditionError("introduce_aux_variables: coefficients must be +-1");
    std::tuple<int, std::size_t, std::size_t> key;
    if (ai > 0 && aj > 0) key = {0, i, j};
    else if (ai < 0 && aj < 0) key = {2, i, j};
    else if (ai > 0) key = {1, i, j};
    else key = {1, j, i};
    const std::int64_t beta = to_i64(pm.b[r]);
    auto it = merged.find(key);
    if (it == merged.end()) {
      merged.emplace(key, std::make_pair(beta, r));
      order.push_back(key);
    } else {
      it->second.first = std::min(it->second.first, beta);
    }
  }
  auto aux = [&](std::int64_t lo, std::int64_t hi) {
    int v = e.g.add_vertex();
    e.lower.push_back(lo);
    e.upper.push_back(hi);
    e.w.emplace_back(0);
    e.origin.push_back(-1);
    return v;
  };
  auto edge = [&](int a, int b, std::int64_t rhs, bool eq) {
    e.g.add_edge(a, b);
    e.rhs.push_back(rhs);
    e.is_eq.push_back(eq);
  };
  for (const auto& key : order) {
    auto [type, i, j] = key;
    auto [beta, row] = merged[key];
    const int vi = static_cast<int>(i), vj = static_cast<int>(j);
    if (type == 0) {
      edge(vi, vj, beta, false);
    } else if (type == 1) {
      int y = aux(1 - e.upper[vj], 1 - e.lower[vj]);
      edge(vi, y, beta + 1, false);
      edge(vj, y, 1, true);
      note(trace, TraceRecord::Kind::aux_var_pair, {static_cast<std::int64_t>(row), y}, "y");
    } else {
      int z = aux(1 - e.upper[vi], 1 - e.lower[vi]);
      int zp = aux(1 - e.upper[vj], 1 - e.lower[vj]);
      edge(z, zp, beta + 2, false);
      edge(vi, z, 1, true);
      edge(vj, zp, 1, true);
      note(trace, TraceRecord::Kind::aux_var_pair, {static_cast<std::int64_t>(row), z, zp}, "z");
    }
  }
  return e;
}

Elimination eliminate_equations(const EdgeConstraintIP& e, ReductionTrace* trace) {
  Elimination el;
  el.relaxed = e;
  el.mu = 1;
  for (int v = 0; v < e.g.n(); ++v) el.mu += abs(e.w[v]) * (e.upper[v] - e.lower[v]);
  el.nu = 0;
  for (int k = 0; k < e.g.m(); ++k) {
    if (!e.is_eq[k]) continue;
    el.eq_edges.push_back(k);
    el.nu += e.rhs[k];
    el.relaxed.w[e.g.edge(k).first] += el.mu;
    el.relaxed.w[e.g.edge(k).second] += el.mu;
    el.relaxed.is_eq[k] = 0;
  }
  if (!el.eq_edges.empty())
    note(trace, TraceRecord::Kind::equation_lift, {static_cast<std::int64_t>(el.eq_edges.size())},
         "mu=" + to_string(el.mu) + " nu=" + to_string(el.nu));
  return el;
}

std::vector<std::int64_t> StableReduction::lift(const VertexSet& s) const {
  std::vector<std::int64_t> x(t.size());
  for (std::size_t v = 0; v < t.size(); ++v) x[v] = t[v] + (fixed[v] == 1 ? 1 : 0);
  for (int hv : s) x[vertex_of[hv]] = t[vertex_of[hv]] + 1;
  return x;
}

StableReduction reduce_to_stable_set(const EdgeConstraintIP& e, ReductionTrace* trace) {
  for (char q : e.is_eq)
    if (q) throw PreconditionError("reduce_to_stable_set: equations must be eliminated first");
  StableReduction red;
  auto out = solve(e.to_ip().relaxation());
  if (out.status == LPStatus::infeasible) {
    red.infeasible = true;
    return red;
  }
  if (out.status != LPStatus::optimal) throw std::logic_error("reduce_to_stable_set: boxed LP is unbounded");
  red.lp_x = out.x;
  auto half = assert_half_integral(out.x);
  const int n = e.g.n();
  for (const auto& z : half.t) red.t.push_back(to_i64(z));
  note(trace, TraceRecord::Kind::translate, red.t);

  red.fixed.assign(n, -1);
  auto fix = [&](int v, signed char val, const char* why) {
    if (red.fixed[v] == val) return true;
    if (red.fixed[v] != -1) return false;
    red.fixed[v] = val;
    note(trace, TraceRecord::Kind::vertex_fix, {v, val}, why);
    return true;
  };
  for (int v = 0; v < n; ++v) {
    const std::int64_t lo = e.lower[v] - red.t[v], hi = e.upper[v] - red.t[v];
    const bool can0 = lo <= 0 && 0 <= hi, can1 = lo <= 1 && 1 <= hi;
    if (!can0 && !can1) {
      red.infeasible = true;
      return red;
    }
    if (!can1) fix(v, 0, "box");
    else if (!can0) fix(v, 1, "box");
  }
  std::vector<int> kept;
  for (int k = 0; k < e.g.m(); ++k) {
    auto [u, v] = e.g.edge(k);
    const std::int64_t beta = e.rhs[k] - red.t[u] - red.t[v];
    if (beta < 0) {
      red.infeasible = true;
      return red;
    }
    if (beta == 0) {
      if (!fix(u, 0, "rhs 0") || !fix(v, 0, "rhs 0")) {
        red.infeasible = true;
        return red;
      }
    } else if (beta == 1) {
      kept.push_back(k);
    }
  }
  for (int k : kept) {
    auto [u, v] = e.g.edge(k);
    if (red.fixed[u] == 1 && red.fixed[v] == 1) {
      red.infeasible = true;
      return red;
    }
  }
  for (int k : kept) {
    auto [u, v] = e.g.edge(k);
    if (red.fixed[u] == 1 && red.fixed[v] == -1) fix(v, 0, "neighbour of 1");
    if (red.fixed[v] == 1 && red.fixed[u] == -1) fix(u, 0, "neighbour of 1");
  }
  std::vector<int> hpos(n, -1);
  for (int v = 0; v < n; ++v) {
    if (red.fixed[v] != -1) {
      note(trace, TraceRecord::Kind::vertex_delete, {v}, red.fixed[v] == 1 ? "fixed 1" : "fixed 0");
      continue;
    }
    hpos[v] = static_cast<int>(red.vertex_of.size());
    red.vertex_of.push_back(v);
    red.weights.push_back(e.w[v]);
  }
  red.h = Graph(static_cast<int>(red.vertex_of.size()));
  for (int k : kept) {
    auto [u, v] = e.g.edge(k);
    if (hpos[u] >= 0 && hpos[v] >= 0) red.h.add_edge(hpos[u], hpos[v]);
  }
  return red;
}

PipelineResult solve_two_per_row(const IPInstance& ip, std::int64_t delta, const StableSolver& solver) {
  ip.validate();
  if (!ip.A.is_integral()) throw PreconditionError("solve_two_per_row: constraint matrix must be integral");
  if (!ip.two_per_row()) throw PreconditionError("solve_two_per_row: a row has more than two nonzeros");
  if (delta < 1) throw PreconditionError("solve_two_per_row: delta must be positive");
  const StableSolver mwis = solver ? solver : StableSolver(max_weight_stable_set);

  PipelineResult res;
  auto root = solve(ip.relaxation());
  if (root.status == LPStatus::infeasible) return res;
  if (root.status == LPStatus::unbounded) {
    IPInstance zero = ip;
    zero.w.assign(ip.n(), 0);
    auto feas = solve_two_per_row(zero, delta, mwis);
    if (feas.result.status == IPStatus::optimal) {
      res.result.status = IPStatus::unbounded;
      res.result.x = feas.result.x;
    }
    res.result.guesses_explored = feas.result.guesses_explored;
    return res;
  }
  res.lp_x = root.x;
  res.J = find_row_clearing_columns(ip.A, delta).cols;

  bool found = false;
  Rational best;
  res.result.guesses_explored =
      enumerate_proximity_guesses(ip, res.J, root.x, delta, [&](const std::vector<std::int64_t>& z, const IPInstance& sub) {
        auto bound = solve(sub.relaxation());
        if (bound.status != LPStatus::optimal) return true;
        if (found && bound.objective <= best) {
          ++res.guesses_pruned;
          return true;
        }
        ReductionTrace trace;
        for (std::size_t k = 0; k < z.size(); ++k)
          note(&trace, TraceRecord::Kind::guess_fix, {static_cast<std::int64_t>(res.J[k]), z[k]});
        auto pm = normalize_single_variable_rows(sub, &trace);
        if (pm.infeasible) return true;
        auto e = introduce_aux_variables(pm.ip, &trace);
        auto el = eliminate_equations(e, &trace);
        auto red = reduce_to_stable_set(el.relaxed, &trace);
        if (red.infeasible) return true;
        auto s = mwis(red.h, red.weights);
        auto xe = red.lift(s.set);
        if (!e.feasible(xe)) return true;  // the equations cannot all hold
        std::vector<std::int64_t> vals(xe.begin(), xe.begin() + static_cast<long>(pm.vars.size()));
        auto x = pm.assemble(vals);
        if (!ip.feasible(x)) throw std::logic_error("solve_two_per_row: lifted point is infeasible");
        Rational v = ip.value(x);
        if (!found || v > best) {
          found = true;
          best = v;
          res.result.x = x;
          res.trace = std::move(trace);
        }
        return true;
      });
  if (found) {
    res.result.status = IPStatus::optimal;
    res.result.objective = best;
  }
  return res;
}

}  // namespace tdm
