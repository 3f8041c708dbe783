#include "tdm/ip.hpp"

#include <stdexcept>

namespace tdm {

const char* to_string(IPStatus s) {
  switch (s) {
    case IPStatus::optimal: return "optimal";
    case IPStatus::infeasible: return "infeasible";
    case IPStatus::unbounded: return "unbounded";
  }
  return "?";
}

void IPInstance::validate() const {
  relaxation().validate();
  for (const auto* bounds : {&lower, &upper})
    for (const auto& q : *bounds)
      if (q && !is_integral(*q)) throw std::invalid_argument("IP bounds must be integral");
}

LPProblem IPInstance::relaxation() const {
  LPProblem p;
  p.A = A;
  p.b = b;
  p.w = w;
  p.lower = lower;
  p.upper = upper;
  return p;
}

bool IPInstance::feasible(const std::vector<Integer>& x) const {
  if (x.size() != n()) return false;
  for (std::size_t j = 0; j < n(); ++j) {
    if (lo(j) && Rational(x[j]) < *lo(j)) return false;
    if (hi(j) && Rational(x[j]) > *hi(j)) return false;
  }
  for (std::size_t i = 0; i < m(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < n(); ++j)
      if (A(i, j) != 0 && x[j] != 0) s += A(i, j) * x[j];
    if (s > b[i]) return false;
  }
  return true;
}

Rational IPInstance::value(const std::vector<Integer>& x) const {
  Rational s = 0;
  for (std::size_t j = 0; j < n(); ++j)
    if (w[j] != 0 && x[j] != 0) s += w[j] * x[j];
  return s;
}

bool IPInstance::two_per_row() const {
  for (std::size_t i = 0; i < m(); ++i)
    if (A.row_nnz(i) > 2) return false;
  return true;
}

bool IPInstance::two_per_column() const {
  for (std::size_t j = 0; j < n(); ++j)
    if (A.col_nnz(j) > 2) return false;
  return true;
}

RVec to_rvec(const std::vector<Integer>& x) {
  RVec r;
  r.reserve(x.size());
  for (const auto& v : x) r.emplace_back(v);
  return r;
}

}  // namespace tdm
