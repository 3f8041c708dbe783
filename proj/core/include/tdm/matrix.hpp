#pragma once

#include "tdm/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace tdm {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static RationalMatrix from_rows(const std::vector<RVec>& rows, std::size_t cols);
  static RationalMatrix from_int_rows(const std::vector<IVec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RVec row(std::size_t i) const;
  RVec col(std::size_t j) const;
  RationalMatrix transposed() const;
  RationalMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

  bool is_integral() const;
  // Number of nonzeros in row i / column j.
  std::size_t row_nnz(std::size_t i) const;
  std::size_t col_nnz(std::size_t j) const;

  // Entry-wise integer copy; throws if some entry is fractional or too large.
  std::vector<IVec> to_int_rows() const;

  std::uint64_t fingerprint() const;

  bool operator==(const RationalMatrix& o) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  RVec data_;
};

Rational det(const RationalMatrix& m);
Integer det_int(const std::vector<IVec>& m);

std::size_t rank(const RationalMatrix& m);

struct DeltaCertificate {
  std::uint64_t matrix_id = 0;
  std::int64_t delta = 0;
  std::size_t verified_up_to_order = 0;
  bool exhaustive = false;
  // An attaining submatrix (empty when delta == 0).
  std::vector<std::size_t> rows, cols;
};

// Exhaustive scan over square submatrices of order <= order_cap.
DeltaCertificate max_abs_subdeterminant(const RationalMatrix& m, std::size_t order_cap = 6);

// Same scan, but stops early once some |det| exceeds bound.  Returns true when
// every scanned submatrix stays within bound.
bool subdeterminants_within(const RationalMatrix& m, std::int64_t bound, std::size_t order_cap);

// floor(log2(delta)), with delta <= 1 mapped to 0.
std::size_t floor_log2(std::int64_t delta);

struct ClearingSets {
  std::vector<std::size_t> rows;     // I
  std::vector<std::size_t> cols;     // J
  std::vector<std::size_t> pivots;   // rows of the triangular witness, paired with cols
};

ClearingSets find_row_clearing_columns(const RationalMatrix& a, std::int64_t delta);
ClearingSets find_column_clearing_sets(const RationalMatrix& a, std::int64_t delta);

}  // namespace tdm
