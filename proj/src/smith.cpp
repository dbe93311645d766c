#include "burnside/smith.hpp"

#include <stdexcept>

namespace burnside {

namespace {

// Coordinates of the smallest-absolute-value nonzero entry in the submatrix
// starting at (from, from); (-1, -1) when the submatrix is zero.
std::pair<int, int> smallest_pivot(const IntMatrix& a, int from) {
  int br = -1, bc = -1;
  BigInt best;
  for (int r = from; r < a.rows(); ++r)
    for (int c = from; c < a.cols(); ++c) {
      if (a.at(r, c) == 0) continue;
      BigInt v = abs(a.at(r, c));
      if (br < 0 || v < best) {
        best = v;
        br = r;
        bc = c;
      }
    }
  return {br, bc};
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& input) {
  IntMatrix a = input;
  const int nr = a.rows(), nc = a.cols();
  IntMatrix left = IntMatrix::identity(nr);
  IntMatrix right = IntMatrix::identity(nc);
  IntMatrix right_inv = IntMatrix::identity(nc);

  auto row_swap = [&](int i, int j) {
    a.swap_rows(i, j);
    left.swap_rows(i, j);
  };
  auto row_add = [&](int i, int j, const BigInt& c) {  // row_i += c * row_j
    a.add_row(i, j, c);
    left.add_row(i, j, c);
  };
  auto row_neg = [&](int i) {
    a.negate_row(i);
    left.negate_row(i);
  };
  // Column operations keep right_inv = right^{-1}.
  auto col_swap = [&](int i, int j) {
    a.swap_cols(i, j);
    right.swap_cols(i, j);
    right_inv.swap_rows(i, j);
  };
  auto col_add = [&](int dst, int src, const BigInt& c) {  // col_dst += c * col_src
    a.add_col(dst, src, c);
    right.add_col(dst, src, c);
    right_inv.add_row(src, dst, -c);
  };
  auto col_neg = [&](int i) {
    a.negate_col(i);
    right.negate_col(i);
    right_inv.negate_row(i);
  };

  const int n = std::min(nr, nc);
  for (int k = 0; k < n; ++k) {
    auto [pr, pc] = smallest_pivot(a, k);
    if (pr < 0) break;
    for (;;) {
      if (pr != k) row_swap(k, pr);
      if (pc != k) col_swap(k, pc);
      if (a.at(k, k) < 0) row_neg(k);
      bool dirty = false;
      for (int r = k + 1; r < nr; ++r) {
        if (a.at(r, k) == 0) continue;
        BigInt q = a.at(r, k) / a.at(k, k);  // truncated; remainder caught next sweep
        if (q != 0) row_add(r, k, -q);
        if (a.at(r, k) != 0) dirty = true;
      }
      for (int c = k + 1; c < nc; ++c) {
        if (a.at(k, c) == 0) continue;
        BigInt q = a.at(k, c) / a.at(k, k);
        if (q != 0) col_add(c, k, -q);
        if (a.at(k, c) != 0) dirty = true;
      }
      if (!dirty) break;
      std::tie(pr, pc) = smallest_pivot(a, k);  // remainders shrank the minimum
    }
  }

  // Enforce the divisibility chain; each repair replaces (d_i, d_j) by
  // (gcd, lcm), which strictly shrinks d_i, so the scan terminates.
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      if (a.at(i, i) == 0) break;
      for (int j = i + 1; j < n; ++j) {
        if (a.at(j, j) == 0) continue;
        if (a.at(j, j) % a.at(i, i) == 0) continue;
        changed = true;
        col_add(i, j, 1);  // plants d_j at (j, i)
        while (a.at(j, i) != 0) {  // gcd of rows i, j inside column i
          BigInt q = a.at(i, i) / a.at(j, i);
          if (q != 0) row_add(i, j, -q);
          row_swap(i, j);
        }
        if (a.at(i, i) < 0) row_neg(i);
        // Fill-in at (i, j) is a multiple of d_j, hence of the new gcd.
        if (a.at(i, j) % a.at(i, i) != 0)
          throw std::runtime_error("smith_normal_form: repair fill-in not divisible");
        col_add(j, i, -BigInt(a.at(i, j) / a.at(i, i)));
        if (a.at(j, j) < 0) col_neg(j);
        if (a.at(i, j) != 0 || a.at(j, i) != 0 || a.at(j, j) % a.at(i, i) != 0)
          throw std::runtime_error("smith_normal_form: block repair failed");
      }
    }
  }

  SmithDecomposition out;
  for (int i = 0; i < n; ++i)
    if (a.at(i, i) != 0) out.invariant_factors.push_back(a.at(i, i));
  for (int r = 0; r < nr; ++r)
    for (int c = 0; c < nc; ++c)
      if (r != c && a.at(r, c) != 0) throw std::runtime_error("smith_normal_form: not diagonal");
  for (size_t i = 0; i + 1 < out.invariant_factors.size(); ++i)
    if (out.invariant_factors[i + 1] % out.invariant_factors[i] != 0)
      throw std::runtime_error("smith_normal_form: divisibility chain violated");
  out.left_transform = std::move(left);
  out.right_transform = std::move(right);
  out.right_inverse = std::move(right_inv);
  return out;
}

IntMatrix hermite_normal_form(const IntMatrix& input) {
  IntMatrix a = input;
  const int nr = a.rows(), nc = a.cols();
  int row = 0;
  std::vector<int> pivots;
  for (int col = 0; col < nc && row < nr; ++col) {
    for (;;) {
      int nz = -1;
      BigInt best;
      for (int r = row; r < nr; ++r) {
        if (a.at(r, col) == 0) continue;
        BigInt v = abs(a.at(r, col));
        if (nz < 0 || v < best) {
          best = v;
          nz = r;
        }
      }
      if (nz < 0) break;
      a.swap_rows(row, nz);
      if (a.at(row, col) < 0) a.negate_row(row);
      bool clean = true;
      for (int r = row + 1; r < nr; ++r) {
        if (a.at(r, col) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), a.at(r, col).get_mpz_t(), a.at(row, col).get_mpz_t());
        a.add_row(r, row, -q);
        if (a.at(r, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (row < nr && a.at(row, col) != 0) {
      pivots.push_back(col);
      ++row;
    }
  }
  // Reduce entries above each pivot into [0, pivot).  Ascending pivot order:
  // reducing with a later pivot never touches the columns of earlier ones.
  for (int r = 0; r < int(pivots.size()); ++r) {
    int col = pivots[r];
    for (int i = 0; i < r; ++i) {
      BigInt q;
      mpz_fdiv_q(q.get_mpz_t(), a.at(i, col).get_mpz_t(), a.at(r, col).get_mpz_t());
      if (q != 0) a.add_row(i, r, -q);
    }
  }
  IntMatrix out(int(pivots.size()), nc);
  for (int r = 0; r < out.rows(); ++r)
    for (int c = 0; c < nc; ++c) out.at(r, c) = a.at(r, c);
  return out;
}

IntMatrix integer_row_kernel(const IntMatrix& a) {
  // x * a = 0  <=>  x in the span of the left-transform rows past the rank.
  SmithDecomposition snf = smith_normal_form(a);
  const int nr = a.rows();
  const int rank = snf.rank();
  IntMatrix basis(nr - rank, nr);
  for (int r = rank; r < nr; ++r)
    for (int c = 0; c < nr; ++c) basis.at(r - rank, c) = snf.left_transform.at(r, c);
  return hermite_normal_form(basis);
}

bool solve_integer_row(const IntMatrix& a, const std::vector<BigInt>& b,
                       std::vector<BigInt>& x) {
  // x * a = b: in normal-form coordinates y * D = b * R, then x = y * L.
  if (int(b.size()) != a.cols()) throw std::invalid_argument("solve_integer_row: size mismatch");
  SmithDecomposition snf = smith_normal_form(a);
  std::vector<BigInt> br(a.cols());
  for (int c = 0; c < a.cols(); ++c) {
    BigInt acc = 0;
    for (int k = 0; k < a.cols(); ++k) acc += b[k] * snf.right_transform.at(k, c);
    br[c] = acc;
  }
  std::vector<BigInt> y(a.rows());
  for (int c = 0; c < a.cols(); ++c) {
    if (c < snf.rank()) {
      if (br[c] % snf.invariant_factors[c] != 0) return false;
      y[c] = br[c] / snf.invariant_factors[c];
    } else if (br[c] != 0) {
      return false;
    }
  }
  x.assign(a.rows(), 0);
  for (int c = 0; c < a.rows(); ++c) {
    BigInt acc = 0;
    for (int k = 0; k < a.rows(); ++k) acc += y[k] * snf.left_transform.at(k, c);
    x[c] = acc;
  }
  return true;
}

LatticeQuotient lattice_quotient(int ambient_rank, const IntMatrix& relations) {
  if (relations.cols() != ambient_rank)
    throw std::invalid_argument("lattice_quotient: ambient rank mismatch");
  LatticeQuotient out;
  if (relations.rows() == 0) {
    out.free_rank = ambient_rank;
    for (int i = 0; i < ambient_rank; ++i) {
      std::vector<BigInt> gen(ambient_rank);
      gen[i] = 1;
      out.free_generators.push_back(std::move(gen));
    }
    return out;
  }
  SmithDecomposition snf = smith_normal_form(relations);
  out.free_rank = ambient_rank - snf.rank();
  // After the right-hand change of basis the relations read d_i * e_i, so
  // quotient generator i pulls back to row i of right_inverse.
  auto gen_row = [&](int i) {
    std::vector<BigInt> gen(ambient_rank);
    for (int c = 0; c < ambient_rank; ++c) gen[c] = snf.right_inverse.at(i, c);
    return gen;
  };
  for (int i = 0; i < snf.rank(); ++i) {
    if (snf.invariant_factors[i] == 1) continue;
    out.invariant_factors.push_back(snf.invariant_factors[i]);
    out.torsion_generators.push_back(gen_row(i));
  }
  for (int i = snf.rank(); i < ambient_rank; ++i) out.free_generators.push_back(gen_row(i));
  return out;
}

}  // namespace burnside
