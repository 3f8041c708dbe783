#include "tdm/matrix.hpp"

#include "tdm/errors.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace tdm {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RVec>& rows, std::size_t cols) {
  RationalMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RationalMatrix RationalMatrix::from_int_rows(const std::vector<IVec>& rows, std::size_t cols) {
  RationalMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RVec RationalMatrix::row(std::size_t i) const {
  return RVec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

RVec RationalMatrix::col(std::size_t j) const {
  RVec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RationalMatrix RationalMatrix::submatrix(const std::vector<std::size_t>& r,
                                         const std::vector<std::size_t>& c) const {
  RationalMatrix s(r.size(), c.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) s(i, j) = (*this)(r[i], c[j]);
  return s;
}

bool RationalMatrix::is_integral() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return tdm::is_integral(q); });
}

std::size_t RationalMatrix::row_nnz(std::size_t i) const {
  std::size_t k = 0;
  for (std::size_t j = 0; j < cols_; ++j) k += (*this)(i, j) != 0;
  return k;
}

std::size_t RationalMatrix::col_nnz(std::size_t j) const {
  std::size_t k = 0;
  for (std::size_t i = 0; i < rows_; ++i) k += (*this)(i, j) != 0;
  return k;
}

std::vector<IVec> RationalMatrix::to_int_rows() const {
  std::vector<IVec> out(rows_, IVec(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = to_i64((*this)(i, j));
  return out;
}

std::uint64_t RationalMatrix::fingerprint() const {
  // FNV-1a over the canonical text of the entries.
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](const std::string& s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 1099511628211ULL;
    }
    h ^= 0xff;
    h *= 1099511628211ULL;
  };
  mix(std::to_string(rows_) + "x" + std::to_string(cols_));
  for (const auto& q : data_) mix(to_string(q));
  return h;
}

Integer det_int(const std::vector<IVec>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("det: matrix is not square");
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  }
  // Bareiss fraction-free elimination.
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return n == 0 ? Integer(1) : Integer(sign * a[n - 1][n - 1]);
}

Rational det(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Clear denominators row by row, then run Bareiss over the integers.
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  Integer scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < n; ++j) l = boost::multiprecision::lcm(l, den(m(i, j)));
    scale *= l;
    for (std::size_t j = 0; j < n; ++j) a[i][j] = num(m(i, j)) * (l / den(m(i, j)));
  }
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return Rational(Integer(sign * a[n - 1][n - 1]), scale);
}

std::size_t rank(const RationalMatrix& m) {
  std::vector<RVec> a(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) a[i] = m.row(i);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < m.cols(); ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

namespace {

// Small-integer determinant for the subdeterminant scan.  Entries stay tiny in
// practice; __int128 keeps the Bareiss products exact, and overflow is checked.
std::int64_t det_small(std::vector<std::int64_t>& a, std::size_t n) {
  __int128 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p * n + k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[p * n + j], a[k * n + j]);
      sign = -sign;
    }
    const __int128 akk = a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const __int128 aik = a[i * n + k];
      for (std::size_t j = k + 1; j < n; ++j) {
        __int128 v = (a[i * n + j] * akk - aik * a[k * n + j]) / prev;
        if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("subdeterminant overflow");
        a[i * n + j] = static_cast<std::int64_t>(v);
      }
      a[i * n + k] = 0;
    }
    prev = akk;
  }
  return sign * a[(n - 1) * n + (n - 1)];
}

struct ScanResult {
  std::int64_t best = 0;
  std::vector<std::size_t> rows, cols;
  bool aborted = false;
};

// Enumerates k-subsets of the short side; for each, restricts the long side
// to those subsets, drops zero and duplicate vectors (they cannot raise |det|),
// and enumerates k-subsets of the remaining vectors with a coverage prune.
ScanResult scan(const RationalMatrix& m, std::size_t cap, std::int64_t stop_above) {
  if (!m.is_integral()) throw std::invalid_argument("max_abs_subdeterminant: non-integral entries");
  auto rows = m.to_int_rows();
  bool transposed = m.cols() > m.rows();
  std::size_t S = transposed ? m.rows() : m.cols();  // short side
  std::size_t L = transposed ? m.cols() : m.rows();  // long side
  auto entry = [&](std::size_t l, std::size_t s) { return transposed ? rows[s][l] : rows[l][s]; };
  if (S > 62) throw CapExceeded("subdeterminant scan: dimension too large");

  ScanResult res;
  std::size_t kmax = std::min(cap, S);
  std::vector<std::int64_t> buf;
  for (std::size_t k = 1; k <= kmax && !res.aborted; ++k) {
    std::vector<std::size_t> ssub(k);
    for (std::size_t i = 0; i < k; ++i) ssub[i] = i;
    while (true) {
      // Long-side vectors restricted to ssub.
      std::vector<std::vector<std::int64_t>> vecs;
      std::vector<std::size_t> origin;
      std::vector<std::uint64_t> support;
      for (std::size_t l = 0; l < L; ++l) {
        std::vector<std::int64_t> v(k);
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i < k; ++i) {
          v[i] = entry(l, ssub[i]);
          if (v[i] != 0) mask |= 1ULL << i;
        }
        if (!mask) continue;
        bool dup = false;
        for (const auto& w : vecs)
          if (w == v) { dup = true; break; }
        if (dup) continue;
        vecs.push_back(std::move(v));
        origin.push_back(l);
        support.push_back(mask);
      }
      const std::size_t V = vecs.size();
      const std::uint64_t full = (k == 64) ? ~0ULL : ((1ULL << k) - 1);
      if (V >= k) {
        // suffix coverage for pruning
        std::vector<std::uint64_t> suffix(V + 1, 0);
        for (std::size_t i = V; i-- > 0;) suffix[i] = suffix[i + 1] | support[i];
        std::vector<std::size_t> pick;
        std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t start, std::uint64_t cov) {
          if (res.aborted) return;
          if (pick.size() == k) {
            if (cov != full) return;
            buf.assign(k * k, 0);
            for (std::size_t a = 0; a < k; ++a)
              for (std::size_t b = 0; b < k; ++b) buf[a * k + b] = vecs[pick[a]][b];
            std::int64_t d = det_small(buf, k);
            if (d < 0) d = -d;
            if (d > res.best) {
              res.best = d;
              std::vector<std::size_t> ls, ss(ssub.begin(), ssub.end());
              for (auto p : pick) ls.push_back(origin[p]);
              if (transposed) { res.rows = ss; res.cols = ls; } else { res.rows = ls; res.cols = ss; }
              if (stop_above >= 0 && d > stop_above) res.aborted = true;
            }
            return;
          }
          std::size_t need = k - pick.size();
          for (std::size_t i = start; i + need <= V; ++i) {
            if (((cov | suffix[i]) & full) != full) return;
            pick.push_back(i);
            rec(i + 1, cov | support[i]);
            pick.pop_back();
            if (res.aborted) return;
          }
        };
        rec(0, 0);
      }
      // next k-subset of the short side
      std::size_t i = k;
      while (i > 0 && ssub[i - 1] == S - k + (i - 1)) --i;
      if (i == 0) break;
      ++ssub[i - 1];
      for (std::size_t j = i; j < k; ++j) ssub[j] = ssub[j - 1] + 1;
      if (res.aborted) break;
    }
  }
  if (res.rows.size() > 1) {
    // report in ascending index order; |det| is unaffected
    std::vector<std::size_t> r = res.rows, c = res.cols;
    std::sort(r.begin(), r.end());
    std::sort(c.begin(), c.end());
    res.rows = r;
    res.cols = c;
  }
  return res;
}

}  // namespace

DeltaCertificate max_abs_subdeterminant(const RationalMatrix& m, std::size_t order_cap) {
  if (order_cap < 1) throw std::invalid_argument("order_cap must be >= 1");
  auto r = scan(m, order_cap, -1);
  DeltaCertificate c;
  c.matrix_id = m.fingerprint();
  c.delta = r.best;
  c.verified_up_to_order = std::min(order_cap, std::min(m.rows(), m.cols()));
  c.exhaustive = order_cap >= std::min(m.rows(), m.cols());
  c.rows = r.rows;
  c.cols = r.cols;
  return c;
}

bool subdeterminants_within(const RationalMatrix& m, std::int64_t bound, std::size_t order_cap) {
  return !scan(m, order_cap, bound).aborted;
}

std::size_t floor_log2(std::int64_t delta) {
  std::size_t k = 0;
  while (delta >= 2) {
    delta >>= 1;
    ++k;
  }
  return k;
}

namespace {

bool unit_row(const RationalMatrix& a, std::size_t i) {
  for (std::size_t j = 0; j < a.cols(); ++j) {
    const auto& v = a(i, j);
    if (v != 0 && v != 1 && v != -1) return false;
  }
  return true;
}

bool hits(const RationalMatrix& a, std::size_t i, const std::vector<std::size_t>& cols) {
  for (auto j : cols)
    if (a(i, j) != 0) return true;
  return false;
}

// Greedy upper-triangular growth: append a row with zeros on the chosen
// columns together with a new column whose entry in that row is >= 2 in
// absolute value.  Rows scanned in order, smallest column index first.
ClearingSets grow_triangle(const RationalMatrix& a, std::int64_t delta) {
  if (!a.is_integral()) throw std::invalid_argument("clearing sets: non-integral matrix");
  const std::size_t limit = floor_log2(delta);
  ClearingSets out;
  std::vector<bool> used_row(a.rows(), false);
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i = 0; i < a.rows() && !progress; ++i) {
      if (used_row[i] || unit_row(a, i) || hits(a, i, out.cols)) continue;
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (std::find(out.cols.begin(), out.cols.end(), j) != out.cols.end()) continue;
        if (abs(a(i, j)) >= 2) {
          out.pivots.push_back(i);
          out.cols.push_back(j);
          used_row[i] = true;
          progress = true;
          break;
        }
      }
    }
    if (out.cols.size() > limit)
      throw NotDeltaModular("triangular submatrix of order " + std::to_string(out.cols.size()) +
                            " with diagonal >= 2 exceeds floor(log2 " + std::to_string(delta) + ")");
  }
  return out;
}

}  // namespace

ClearingSets find_row_clearing_columns(const RationalMatrix& a, std::int64_t delta) {
  auto out = grow_triangle(a, delta);
  out.rows = out.pivots;
  return out;
}

ClearingSets find_column_clearing_sets(const RationalMatrix& a, std::int64_t delta) {
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (a.col_nnz(j) > 2) throw PreconditionError("column " + std::to_string(j) + " has more than two nonzeros");
  auto out = grow_triangle(a, delta);
  std::vector<std::size_t> rows;
  for (auto j : out.cols)
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (a(i, j) != 0) rows.push_back(i);
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  out.rows = rows;
  return out;
}

}  // namespace tdm
