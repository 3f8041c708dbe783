#include "tdm/lp.hpp"

#include "tdm/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tdm {

void LPProblem::validate() const {
  if (b.size() != A.rows()) throw std::invalid_argument("LP: rhs size mismatch");
  if (w.size() != A.cols()) throw std::invalid_argument("LP: objective size mismatch");
  if (!lower.empty() && lower.size() != A.cols()) throw std::invalid_argument("LP: lower bound size mismatch");
  if (!upper.empty() && upper.size() != A.cols()) throw std::invalid_argument("LP: upper bound size mismatch");
}

const char* to_string(LPStatus s) {
  switch (s) {
    case LPStatus::infeasible: return "infeasible";
    case LPStatus::unbounded: return "unbounded";
    case LPStatus::optimal: return "optimal";
  }
  return "?";
}

namespace {

enum class Kind { shift_low, flip_up, free_split };

class Tableau {
 public:
  std::vector<RVec> T;              // rows x (ncols + 1), last entry is the rhs
  std::vector<std::size_t> basis;   // basic column per row
  RVec r;                           // reduced profits c_j - c_B^T T_j
  std::size_t ncols = 0;
  std::size_t pivots = 0;

  void reduced_from(const RVec& c) {
    r.assign(ncols, 0);
    for (std::size_t j = 0; j < ncols; ++j) r[j] = c[j];
    for (std::size_t i = 0; i < T.size(); ++i) {
      const Rational& cb = c[basis[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < ncols; ++j)
        if (T[i][j] != 0) r[j] -= cb * T[i][j];
    }
  }

  void pivot(std::size_t p, std::size_t q) {
    ++pivots;
    RVec& prow = T[p];
    const Rational inv = 1 / prow[q];
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j <= ncols; ++j) {
      if (prow[j] == 0) continue;
      prow[j] *= inv;
      nz.push_back(j);
    }
    for (std::size_t i = 0; i < T.size(); ++i) {
      if (i == p || T[i][q] == 0) continue;
      const Rational f = T[i][q];
      for (auto j : nz) T[i][j] -= f * prow[j];
    }
    if (r[q] != 0) {
      const Rational f = r[q];
      for (auto j : nz)
        if (j < ncols) r[j] -= f * prow[j];
    }
    basis[p] = q;
  }

  // Bland's rule.  Returns npos when optimal, otherwise the entering column
  // of an unbounded direction.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  enum class Result { optimal, unbounded };

  Result run(const std::vector<bool>& eligible, std::size_t& unbounded_col) {
    while (true) {
      std::size_t q = npos;
      for (std::size_t j = 0; j < ncols; ++j)
        if (eligible[j] && r[j] > 0) { q = j; break; }
      if (q == npos) return Result::optimal;
      std::size_t p = npos;
      Rational best;
      for (std::size_t i = 0; i < T.size(); ++i) {
        if (T[i][q] <= 0) continue;
        Rational ratio = T[i][ncols] / T[i][q];
        if (p == npos || ratio < best || (ratio == best && basis[i] < basis[p])) {
          p = i;
          best = ratio;
        }
      }
      if (p == npos) {
        unbounded_col = q;
        return Result::unbounded;
      }
      pivot(p, q);
    }
  }
};

}  // namespace

LPOutcome solve(const LPProblem& p) {
  p.validate();
  const std::size_t n = p.num_vars(), m = p.A.rows();
  auto lo = [&](std::size_t j) -> const OptQ& {
    static const OptQ none;
    return p.lower.empty() ? none : p.lower[j];
  };
  auto up = [&](std::size_t j) -> const OptQ& {
    static const OptQ none;
    return p.upper.empty() ? none : p.upper[j];
  };

  LPOutcome out;
  for (std::size_t j = 0; j < n; ++j)
    if (lo(j) && up(j) && *lo(j) > *up(j)) return out;  // empty box

  // Variable substitution into x' >= 0.
  std::vector<Kind> kind(n);
  std::vector<std::size_t> col(n);
  std::vector<Rational> offset(n);
  std::vector<std::size_t> upper_rows;  // variables with an explicit x' <= u - l row
  std::size_t ns = 0;
  for (std::size_t j = 0; j < n; ++j) {
    col[j] = ns;
    if (lo(j)) {
      kind[j] = Kind::shift_low;
      offset[j] = *lo(j);
      ++ns;
      if (up(j)) upper_rows.push_back(j);
    } else if (up(j)) {
      kind[j] = Kind::flip_up;
      offset[j] = *up(j);
      ++ns;
    } else {
      kind[j] = Kind::free_split;
      offset[j] = 0;
      ns += 2;
    }
  }
  const std::size_t M = m + upper_rows.size();

  // Dense rows in x' space.
  std::vector<RVec> rows(M, RVec(ns));
  RVec rhs(M);
  for (std::size_t i = 0; i < m; ++i) {
    rhs[i] = p.b[i];
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& a = p.A(i, j);
      if (a == 0) continue;
      rhs[i] -= a * offset[j];
      switch (kind[j]) {
        case Kind::shift_low: rows[i][col[j]] = a; break;
        case Kind::flip_up: rows[i][col[j]] = -a; break;
        case Kind::free_split:
          rows[i][col[j]] = a;
          rows[i][col[j] + 1] = -a;
          break;
      }
    }
  }
  for (std::size_t k = 0; k < upper_rows.size(); ++k) {
    std::size_t j = upper_rows[k];
    rows[m + k][col[j]] = 1;
    rhs[m + k] = *up(j) - *lo(j);
  }
  RVec cost_s(ns);
  for (std::size_t j = 0; j < n; ++j) {
    switch (kind[j]) {
      case Kind::shift_low: cost_s[col[j]] = p.w[j]; break;
      case Kind::flip_up: cost_s[col[j]] = -p.w[j]; break;
      case Kind::free_split:
        cost_s[col[j]] = p.w[j];
        cost_s[col[j] + 1] = -p.w[j];
        break;
    }
  }

  // Columns: structural [0, ns), slacks [ns, ns + M), artificials after.
  std::vector<std::size_t> art_rows;
  for (std::size_t i = 0; i < M; ++i)
    if (rhs[i] < 0) art_rows.push_back(i);
  Tableau tb;
  tb.ncols = ns + M + art_rows.size();
  tb.T.assign(M, RVec(tb.ncols + 1));
  tb.basis.assign(M, 0);
  std::size_t a_idx = 0;
  for (std::size_t i = 0; i < M; ++i) {
    const bool neg = rhs[i] < 0;
    const int s = neg ? -1 : 1;
    for (std::size_t j = 0; j < ns; ++j)
      if (rows[i][j] != 0) tb.T[i][j] = s * rows[i][j];
    tb.T[i][ns + i] = s;
    tb.T[i][tb.ncols] = s * rhs[i];
    if (neg) {
      std::size_t ac = ns + M + a_idx++;
      tb.T[i][ac] = 1;
      tb.basis[i] = ac;
    } else {
      tb.basis[i] = ns + i;
    }
  }
  const std::size_t first_art = ns + M;

  std::size_t ucol = 0;
  if (!art_rows.empty()) {
    RVec c1(tb.ncols, 0);
    for (std::size_t j = first_art; j < tb.ncols; ++j) c1[j] = -1;
    tb.reduced_from(c1);
    std::vector<bool> elig(tb.ncols, true);
    tb.run(elig, ucol);  // phase 1 is bounded by construction
    Rational infeas = 0;
    for (std::size_t i = 0; i < tb.T.size(); ++i)
      if (tb.basis[i] >= first_art) infeas += tb.T[i][tb.ncols];
    if (infeas > 0) {
      out.status = LPStatus::infeasible;
      out.pivots = tb.pivots;
      return out;
    }
    // Drive zero-valued artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < tb.T.size();) {
      if (tb.basis[i] < first_art) { ++i; continue; }
      std::size_t q = Tableau::npos;
      for (std::size_t j = 0; j < first_art; ++j)
        if (tb.T[i][j] != 0) { q = j; break; }
      if (q == Tableau::npos) {
        tb.T.erase(tb.T.begin() + static_cast<std::ptrdiff_t>(i));
        tb.basis.erase(tb.basis.begin() + static_cast<std::ptrdiff_t>(i));
        continue;
      }
      tb.r.assign(tb.ncols, 0);
      tb.pivot(i, q);
      ++i;
    }
  }

  RVec c2(tb.ncols, 0);
  for (std::size_t j = 0; j < ns; ++j) c2[j] = cost_s[j];
  tb.reduced_from(c2);
  std::vector<bool> elig(tb.ncols, false);
  for (std::size_t j = 0; j < first_art; ++j) elig[j] = true;
  auto res = tb.run(elig, ucol);
  out.pivots = tb.pivots;

  RVec xs(ns, 0);
  for (std::size_t i = 0; i < tb.T.size(); ++i)
    if (tb.basis[i] < ns) xs[tb.basis[i]] = tb.T[i][tb.ncols];
  auto back = [&](const RVec& v, bool with_offset) {
    RVec x(n);
    for (std::size_t j = 0; j < n; ++j) {
      Rational base = with_offset ? offset[j] : Rational(0);
      switch (kind[j]) {
        case Kind::shift_low: x[j] = base + v[col[j]]; break;
        case Kind::flip_up: x[j] = base - v[col[j]]; break;
        case Kind::free_split: x[j] = v[col[j]] - v[col[j] + 1]; break;
      }
    }
    return x;
  };

  if (res == Tableau::Result::unbounded) {
    out.status = LPStatus::unbounded;
    RVec d(ns, 0);
    if (ucol < ns) d[ucol] = 1;
    for (std::size_t i = 0; i < tb.T.size(); ++i)
      if (tb.basis[i] < ns) d[tb.basis[i]] = -tb.T[i][ucol];
    out.ray = back(d, false);
    out.x = back(xs, true);
    return out;
  }

  out.status = LPStatus::optimal;
  out.x = back(xs, true);
  out.objective = dot(p.w, out.x);

  LPDual d;
  d.y.assign(m, 0);
  d.z_upper.assign(n, 0);
  d.z_lower.assign(n, 0);
  for (std::size_t i = 0; i < m; ++i) d.y[i] = -tb.r[ns + i];
  for (std::size_t k = 0; k < upper_rows.size(); ++k) d.z_upper[upper_rows[k]] = -tb.r[ns + m + k];
  for (std::size_t j = 0; j < n; ++j) {
    if (kind[j] == Kind::shift_low) d.z_lower[j] = -tb.r[col[j]];
    else if (kind[j] == Kind::flip_up) d.z_upper[j] = -tb.r[col[j]];
  }
  out.dual = std::move(d);
  out.is_vertex = is_vertex_of(p, out.x);
  return out;
}

Rational dual_objective(const LPProblem& p, const LPDual& d) {
  Rational v = dot(p.b, d.y);
  for (std::size_t j = 0; j < p.num_vars(); ++j) {
    if (d.z_upper[j] != 0) v += d.z_upper[j] * *p.upper.at(j);
    if (d.z_lower[j] != 0) v -= d.z_lower[j] * *p.lower.at(j);
  }
  return v;
}

bool is_vertex_of(const LPProblem& p, const RVec& x) {
  const std::size_t n = p.num_vars();
  std::vector<RVec> tight;
  for (std::size_t i = 0; i < p.A.rows(); ++i) {
    RVec r = p.A.row(i);
    if (dot(r, x) == p.b[i]) tight.push_back(std::move(r));
  }
  for (std::size_t j = 0; j < n; ++j) {
    bool at_bound = (!p.lower.empty() && p.lower[j] && *p.lower[j] == x[j]) ||
                    (!p.upper.empty() && p.upper[j] && *p.upper[j] == x[j]);
    if (at_bound) {
      RVec e(n, 0);
      e[j] = 1;
      tight.push_back(std::move(e));
    }
  }
  if (tight.size() < n) return false;
  return rank(RationalMatrix::from_rows(tight, n)) == n;
}

HalfIntegral assert_half_integral(const RVec& x) {
  HalfIntegral h;
  h.t.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    Integer f = floor_int(x[i]);
    Rational frac = x[i] - Rational(f);
    h.t[i] = f;
    if (frac == 0) h.zeros.push_back(i);
    else if (frac == Rational(1, 2)) h.halves.push_back(i);
    else throw PreconditionError("vertex is not half-integral at coordinate " + std::to_string(i) +
                                 " (value " + to_string(x[i]) + ")");
  }
  return h;
}

}  // namespace tdm
