#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace burnside {

// Exact rational scalar used throughout; always reduced, denominator > 0.
using BigRational = mpq_class;
using BigInt = mpz_class;

// Dense matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> init);

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  BigInt& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  const BigInt& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  IntMatrix transposed() const;
  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const = default;

  void swap_rows(int i, int j);
  void swap_cols(int i, int j);
  // row_i += c * row_j, col_i += c * col_j
  void add_row(int i, int j, const BigInt& c);
  void add_col(int i, int j, const BigInt& c);
  void negate_row(int i);
  void negate_col(int i);

  bool is_zero_row(int i) const;
  // Applies p to both rows and columns: result(r,c) = (*this)(p[r], p[c]).
  IntMatrix permuted_symmetric(const std::vector<int>& p) const;

  std::string to_string() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<BigInt> a_;
};

// Dense matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static RatMatrix identity(int n);
  static RatMatrix from_int(const IntMatrix& m);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  BigRational& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  const BigRational& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  RatMatrix operator*(const RatMatrix& o) const;
  bool operator==(const RatMatrix& o) const = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<BigRational> a_;
};

// Exact inverse of a square lower-triangular integer matrix with positive
// diagonal.  Throws std::invalid_argument on any other input.
RatMatrix triangular_inverse(const IntMatrix& m);

struct RowReduction {
  IntMatrix h_tilde;            // echelon form, zero rows removed
  IntMatrix u_tilde;            // u_tilde * input = h_tilde
  std::vector<int> pivot_cols;  // pivot column of each surviving row
};

// Integer row reduction of a symmetric positive-semidefinite matrix M:
// subtracts integer multiples of each diagonal pivot row from the rows below
// it.  A vanishing diagonal entry is only legal when its whole working row and
// column have vanished (guaranteed for PSD Gram matrices; asserted), in which
// case the column is skipped.  Zero rows are deleted from the result.
// Throws std::runtime_error if a non-integer multiplier would be required.
RowReduction row_reduce_upper(const IntMatrix& m);

}  // namespace burnside
