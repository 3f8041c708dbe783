#include "tdm/oracle.hpp"

#include "tdm/errors.hpp"

#include <algorithm>
#include <string>

namespace tdm {

SearchBox SearchBox::uniform(std::size_t n, std::int64_t lo, std::int64_t hi) {
  SearchBox b;
  b.range.assign(n, {lo, hi});
  return b;
}

SearchBox SearchBox::from_bounds(const IPInstance& ip) {
  SearchBox b;
  for (std::size_t j = 0; j < ip.n(); ++j) {
    if (!ip.lo(j) || !ip.hi(j))
      throw PreconditionError("variable " + std::to_string(j) + " has no finite box");
    b.range.emplace_back(to_i64(*ip.lo(j)), to_i64(*ip.hi(j)));
  }
  return b;
}

SearchBox SearchBox::around(const RVec& center, const Rational& radius) {
  SearchBox b;
  for (const auto& c : center) b.range.emplace_back(to_i64(ceil_int(c - radius)), to_i64(floor_int(c + radius)));
  return b;
}

SearchBox SearchBox::intersect(const SearchBox& o) const {
  SearchBox b;
  for (std::size_t j = 0; j < range.size(); ++j)
    b.range.emplace_back(std::max(range[j].first, o.range[j].first), std::min(range[j].second, o.range[j].second));
  return b;
}

bool SearchBox::empty() const {
  return std::any_of(range.begin(), range.end(), [](const auto& r) { return r.first > r.second; });
}

long double SearchBox::volume() const {
  long double v = 1;
  for (const auto& [lo, hi] : range) v *= (hi >= lo) ? static_cast<long double>(hi - lo + 1) : 0.0L;
  return v;
}

namespace {

std::int64_t checked(const Integer& z) { return to_i64(z); }

}  // namespace

IPResult brute_force_ip(const IPInstance& ip, const SearchBox& box, long double cap) {
  ip.validate();
  const std::size_t n = ip.n(), m = ip.m();
  if (box.range.size() != n) throw std::invalid_argument("brute_force_ip: box dimension mismatch");
  IPResult res;
  SearchBox bx = box;
  for (std::size_t j = 0; j < n; ++j) {
    if (ip.lo(j)) bx.range[j].first = std::max(bx.range[j].first, to_i64(*ip.lo(j)));
    if (ip.hi(j)) bx.range[j].second = std::min(bx.range[j].second, to_i64(*ip.hi(j)));
  }
  if (bx.empty()) return res;
  if (bx.volume() > cap) throw CapExceeded("brute_force_ip: box has more than cap points");

  // Integer rows: scale each row (and the objective) by the lcm of its denominators.
  std::vector<std::vector<std::int64_t>> a(m, std::vector<std::int64_t>(n));
  std::vector<std::int64_t> b(m);
  for (std::size_t i = 0; i < m; ++i) {
    Integer l = den(ip.b[i]);
    for (std::size_t j = 0; j < n; ++j) l = boost::multiprecision::lcm(l, den(ip.A(i, j)));
    for (std::size_t j = 0; j < n; ++j) a[i][j] = checked(num(ip.A(i, j) * l));
    b[i] = checked(num(ip.b[i] * l));
  }
  Integer lw = 1;
  for (const auto& q : ip.w) lw = boost::multiprecision::lcm(lw, den(q));
  std::vector<std::int64_t> w(n);
  for (std::size_t j = 0; j < n; ++j) w[j] = checked(num(ip.w[j] * lw));

  // minrem[i][d] = smallest possible contribution of variables d.. to row i
  std::vector<std::vector<__int128>> minrem(m, std::vector<__int128>(n + 1, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t d = n; d-- > 0;) {
      __int128 lo = static_cast<__int128>(a[i][d]) * bx.range[d].first;
      __int128 hi = static_cast<__int128>(a[i][d]) * bx.range[d].second;
      minrem[i][d] = minrem[i][d + 1] + std::min(lo, hi);
    }
  std::vector<std::vector<std::size_t>> rows_of(n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a[i][j] != 0) rows_of[j].push_back(i);
  for (std::size_t i = 0; i < m; ++i)
    if (minrem[i][0] > b[i]) return res;

  std::vector<__int128> partial(m, 0);
  std::vector<std::int64_t> x(n), best_x;
  __int128 best = 0;
  bool found = false;

  auto rec = [&](auto&& self, std::size_t d, __int128 obj) -> void {
    if (d == n) {
      if (!found || obj > best) {
        found = true;
        best = obj;
        best_x = x;
      }
      return;
    }
    for (std::int64_t v = bx.range[d].first; v <= bx.range[d].second; ++v) {
      x[d] = v;
      bool ok = true;
      for (auto i : rows_of[d]) {
        partial[i] += static_cast<__int128>(a[i][d]) * v;
      }
      for (auto i : rows_of[d])
        if (partial[i] + minrem[i][d + 1] > b[i]) { ok = false; break; }
      if (ok) self(self, d + 1, obj + static_cast<__int128>(w[d]) * v);
      for (auto i : rows_of[d]) partial[i] -= static_cast<__int128>(a[i][d]) * v;
    }
  };
  rec(rec, 0, 0);

  if (!found) return res;
  res.status = IPStatus::optimal;
  res.x.assign(best_x.begin(), best_x.end());
  res.objective = ip.value(res.x);
  return res;
}

IPResult branch_and_bound_ip(const IPInstance& ip, std::optional<Rational> cutoff, std::size_t node_cap) {
  ip.validate();
  const std::size_t n = ip.n();
  IPResult res;

  LPProblem root = ip.relaxation();
  if (root.lower.empty()) root.lower.assign(n, std::nullopt);
  if (root.upper.empty()) root.upper.assign(n, std::nullopt);

  auto first = solve(root);
  if (first.status == LPStatus::infeasible) return res;
  if (first.status == LPStatus::unbounded) {
    IPInstance zero = ip;
    zero.w.assign(n, 0);
    auto feas = branch_and_bound_ip(zero, std::nullopt, node_cap);
    if (feas.status == IPStatus::optimal) {
      res.status = IPStatus::unbounded;
      res.x = feas.x;
    }
    return res;
  }

  std::optional<Rational> inc = cutoff;
  bool found = false;
  std::vector<Integer> best_x;
  std::size_t nodes = 0;
  std::vector<std::pair<std::vector<OptQ>, std::vector<OptQ>>> stack;
  stack.emplace_back(root.lower, root.upper);
  while (!stack.empty()) {
    auto [lo, hi] = std::move(stack.back());
    stack.pop_back();
    if (++nodes > node_cap) throw CapExceeded("branch_and_bound_ip: node cap exceeded");
    LPProblem p = root;
    p.lower = lo;
    p.upper = hi;
    auto out = (nodes == 1) ? first : solve(p);
    if (out.status != LPStatus::optimal) continue;
    if (inc && out.objective <= *inc) continue;
    std::size_t frac = n;
    for (std::size_t j = 0; j < n; ++j)
      if (!is_integral(out.x[j])) { frac = j; break; }
    if (frac == n) {
      inc = out.objective;
      found = true;
      best_x.clear();
      for (const auto& v : out.x) best_x.push_back(num(v));
      continue;
    }
    Integer f = floor_int(out.x[frac]);
    auto lo_up = lo;
    lo_up[frac] = Rational(f + 1);
    auto hi_dn = hi;
    hi_dn[frac] = Rational(f);
    stack.emplace_back(std::move(lo_up), hi);
    stack.emplace_back(lo, std::move(hi_dn));
  }
  res.guesses_explored = nodes;
  if (!found) return res;
  res.status = IPStatus::optimal;
  res.x = best_x;
  res.objective = *inc;
  return res;
}

void enumerate_stable_sets(const Graph& g, const std::function<void(std::uint64_t)>& f, int cap) {
  if (g.n() > cap || g.n() > 64) throw CapExceeded("enumerate_stable_sets: too many vertices");
  std::vector<std::uint64_t> nb(g.n());
  for (int v = 0; v < g.n(); ++v) nb[v] = g.nbr_mask(v);
  auto rec = [&](auto&& self, int v, std::uint64_t mask, std::uint64_t forbidden) -> void {
    if (v == g.n()) {
      f(mask);
      return;
    }
    self(self, v + 1, mask, forbidden);
    if (!((forbidden >> v) & 1)) self(self, v + 1, mask | (1ULL << v), forbidden | nb[v]);
  };
  rec(rec, 0, 0, 0);
}

std::uint64_t count_stable_sets(const Graph& g, int cap) {
  std::uint64_t c = 0;
  enumerate_stable_sets(g, [&](std::uint64_t) { ++c; }, cap);
  return c;
}

}  // namespace tdm
