#include "burnside/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace burnside {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> init) {
  rows_ = int(init.size());
  cols_ = rows_ ? int(init.begin()->size()) : 0;
  a_.reserve(size_t(rows_) * cols_);
  for (const auto& row : init) {
    if (int(row.size()) != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : row) a_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const BigInt& v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
    }
  return r;
}

void IntMatrix::swap_rows(int i, int j) {
  if (i == j) return;
  for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(int i, int j) {
  if (i == j) return;
  for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::add_row(int i, int j, const BigInt& c) {
  for (int k = 0; k < cols_; ++k) at(i, k) += c * at(j, k);
}

void IntMatrix::add_col(int i, int j, const BigInt& c) {
  for (int k = 0; k < rows_; ++k) at(k, i) += c * at(k, j);
}

void IntMatrix::negate_row(int i) {
  for (int c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::negate_col(int i) {
  for (int r = 0; r < rows_; ++r) at(r, i) = -at(r, i);
}

bool IntMatrix::is_zero_row(int i) const {
  for (int c = 0; c < cols_; ++c)
    if (at(i, c) != 0) return false;
  return true;
}

IntMatrix IntMatrix::permuted_symmetric(const std::vector<int>& p) const {
  if (rows_ != cols_ || int(p.size()) != rows_)
    throw std::invalid_argument("permutation size mismatch");
  IntMatrix r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(p[i], p[j]);
  return r;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) os << (c ? " " : "") << at(r, c).get_str();
    os << "\n";
  }
  return os.str();
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_int(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j);
  return r;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  RatMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const BigRational& v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
    }
  return r;
}

RatMatrix triangular_inverse(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("triangular_inverse: not square");
  const int n = m.rows();
  for (int i = 0; i < n; ++i) {
    if (m.at(i, i) == 0) throw std::invalid_argument("triangular_inverse: zero diagonal");
    for (int j = i + 1; j < n; ++j)
      if (m.at(i, j) != 0) throw std::invalid_argument("triangular_inverse: not lower triangular");
  }
  // Forward substitution on each unit column.
  RatMatrix inv(n, n);
  for (int col = 0; col < n; ++col) {
    for (int i = col; i < n; ++i) {
      BigRational acc = (i == col) ? BigRational(1) : BigRational(0);
      for (int k = col; k < i; ++k) acc -= BigRational(m.at(i, k)) * inv.at(k, col);
      inv.at(i, col) = acc / BigRational(m.at(i, i));
    }
  }
  return inv;
}

RowReduction row_reduce_upper(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("row_reduce_upper: not square");
  const int n = m.rows();
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(n);

  for (int j = 0; j < n; ++j) {
    if (h.at(j, j) == 0) {
      // Legal only when the working row and column already vanished.
      for (int c = j; c < n; ++c)
        if (h.at(j, c) != 0) throw std::runtime_error("row_reduce_upper: zero pivot on nonzero row");
      for (int r = j + 1; r < n; ++r)
        if (h.at(r, j) != 0) throw std::runtime_error("row_reduce_upper: zero pivot on nonzero column");
      continue;
    }
    if (h.at(j, j) < 0) throw std::runtime_error("row_reduce_upper: negative pivot");
    for (int i = j + 1; i < n; ++i) {
      if (h.at(i, j) == 0) continue;
      BigInt q, r;
      mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), h.at(i, j).get_mpz_t(), h.at(j, j).get_mpz_t());
      if (r != 0) throw std::runtime_error("row_reduce_upper: non-integer multiplier");
      h.add_row(i, j, -q);
      u.add_row(i, j, -q);
    }
  }

  RowReduction out;
  std::vector<int> kept;
  for (int i = 0; i < n; ++i)
    if (!h.is_zero_row(i)) kept.push_back(i);
  out.h_tilde = IntMatrix(int(kept.size()), n);
  out.u_tilde = IntMatrix(int(kept.size()), n);
  for (int r = 0; r < int(kept.size()); ++r) {
    for (int c = 0; c < n; ++c) {
      out.h_tilde.at(r, c) = h.at(kept[r], c);
      out.u_tilde.at(r, c) = u.at(kept[r], c);
    }
    out.pivot_cols.push_back(kept[r]);  // pivot of surviving row i sits at column i
  }
  // Staircase sanity: pivots strictly increase and lead their rows.
  for (int r = 0; r < int(kept.size()); ++r) {
    for (int c = 0; c < out.pivot_cols[r]; ++c)
      if (out.h_tilde.at(r, c) != 0) throw std::runtime_error("row_reduce_upper: staircase violated");
    if (out.h_tilde.at(r, out.pivot_cols[r]) <= 0)
      throw std::runtime_error("row_reduce_upper: nonpositive pivot");
  }
  return out;
}

}  // namespace burnside
