#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>
#include <vector>

#include "burnside/cyclotomic.hpp"
#include "burnside/matrix.hpp"
#include "burnside/reference_data.hpp"
#include "burnside/smith.hpp"

using namespace burnside;

namespace {

Cyclotomic zeta(unsigned e, long k) { return Cyclotomic::root_power(e, k); }

Cyclotomic rational(long v) { return Cyclotomic(BigRational(v)); }

// Laplace expansion, adequate for the 4x4 oracle sizes used below.
BigInt brute_det(const IntMatrix& m, std::vector<int> rows, std::vector<int> cols) {
  if (rows.empty()) return 1;
  BigInt det = 0;
  int sign = 1;
  for (size_t k = 0; k < cols.size(); ++k) {
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    std::vector<int> sub_cols;
    for (size_t j = 0; j < cols.size(); ++j)
      if (j != k) sub_cols.push_back(cols[j]);
    det += sign * m.at(rows[0], cols[k]) * brute_det(m, sub_rows, sub_cols);
    sign = -sign;
  }
  return det;
}

BigInt brute_det(const IntMatrix& m) {
  std::vector<int> idx;
  for (int i = 0; i < m.rows(); ++i) idx.push_back(i);
  return brute_det(m, idx, idx);
}

// gcd of all k x k minors; 0 when every minor vanishes.
BigInt minor_gcd(const IntMatrix& m, int k, std::vector<int> rows, std::vector<int> cols,
                 int row_from, int col_from) {
  if (int(rows.size()) == k && int(cols.size()) == k) {
    BigInt d = brute_det(m, rows, cols);
    return abs(d);
  }
  BigInt g = 0;
  if (int(rows.size()) < k) {
    for (int r = row_from; r < m.rows(); ++r) {
      rows.push_back(r);
      BigInt sub = minor_gcd(m, k, rows, cols, r + 1, col_from);
      rows.pop_back();
      g = gcd(g, sub);
    }
    return g;
  }
  for (int c = col_from; c < m.cols(); ++c) {
    cols.push_back(c);
    BigInt sub = minor_gcd(m, k, rows, cols, row_from, c + 1);
    cols.pop_back();
    g = gcd(g, sub);
  }
  return g;
}

BigInt minor_gcd(const IntMatrix& m, int k) { return minor_gcd(m, k, {}, {}, 0, 0); }

IntMatrix padded_diagonal(const SmithDecomposition& d, int rows, int cols) {
  IntMatrix expect(rows, cols);
  for (size_t i = 0; i < d.invariant_factors.size(); ++i)
    expect.at(int(i), int(i)) = d.invariant_factors[i];
  return expect;
}

}  // namespace

TEST_CASE("cyclotomic constants and products") {
  CHECK(zeta(3, 1) + zeta(3, 2) == rational(-1));
  CHECK(cyclotomic_mul(zeta(5, 1) + zeta(5, 4), zeta(5, 2) + zeta(5, 3)) == rational(-1));

  Cyclotomic sqrt2 = zeta(8, 1) + zeta(8, 7);
  CHECK(cyclotomic_mul(sqrt2, sqrt2) == rational(2));
  CHECK(sqrt2.to_string() == "z8 - z8^3");

  CHECK(cyclotomic_mul(zeta(4, 1), zeta(4, 1)) == rational(-1));
  // Mixed orders lift into Q(zeta_6): (-1) * zeta_3 = zeta_6^5.
  CHECK(cyclotomic_mul(zeta(2, 1), zeta(3, 1)) == zeta(6, 5));

  CHECK((zeta(3, 1) + zeta(3, 2)).is_integer());
  CHECK_FALSE(zeta(5, 1).is_rational());
  CHECK(zeta(8, 1).conjugate() == zeta(8, 7));
}

TEST_CASE("cyclotomic galois trace is rational") {
  Cyclotomic x = zeta(5, 1) + rational(3);
  Cyclotomic trace = Cyclotomic::zero(5);
  for (long a = 1; a < 5; ++a) trace += x.galois(a);
  REQUIRE(trace.is_rational());
  CHECK(trace.rational_value() == 11);  // tr(zeta_5) = -1, plus 4 * 3

  Cyclotomic y = zeta(8, 1) + zeta(8, 3).scaled(BigRational(1, 2));
  Cyclotomic t8 = Cyclotomic::zero(8);
  for (long a : {1, 3, 5, 7}) t8 += y.galois(a);
  CHECK(t8.is_rational());
}

TEST_CASE("triangular inverse") {
  CHECK(triangular_inverse(IntMatrix::identity(3)) == RatMatrix::identity(3));

  RatMatrix inv2 = triangular_inverse(IntMatrix{{2, 0}, {1, 1}});
  CHECK(inv2.at(0, 0) == BigRational(1, 2));
  CHECK(inv2.at(0, 1) == 0);
  CHECK(inv2.at(1, 0) == BigRational(-1, 2));
  CHECK(inv2.at(1, 1) == 1);

  IntMatrix m{{4, 0, 0}, {2, 2, 0}, {1, 1, 1}};
  RatMatrix inv3 = triangular_inverse(m);
  RatMatrix expect(3, 3);
  expect.at(0, 0) = BigRational(1, 4);
  expect.at(1, 0) = BigRational(-1, 4);
  expect.at(1, 1) = BigRational(1, 2);
  expect.at(2, 1) = BigRational(-1, 2);
  expect.at(2, 2) = 1;
  CHECK(inv3 == expect);
  CHECK(RatMatrix::from_int(m) * inv3 == RatMatrix::identity(3));

  CHECK_THROWS_AS(triangular_inverse(IntMatrix{{1, 1}, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(triangular_inverse(IntMatrix{{0, 0}, {1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(triangular_inverse(IntMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("row reduction of multiplicity matrices") {
  RowReduction r = row_reduce_upper(IntMatrix{{1, 1}, {1, 3}});
  CHECK(r.h_tilde == IntMatrix{{1, 1}, {0, 2}});
  CHECK(r.u_tilde * IntMatrix{{1, 1}, {1, 3}} == r.h_tilde);
  CHECK(r.pivot_cols == std::vector<int>{0, 1});

  RowReduction one = row_reduce_upper(IntMatrix{{1}});
  CHECK(one.h_tilde == IntMatrix{{1}});
  CHECK(one.u_tilde == IntMatrix{{1}});
}

TEST_CASE("row reduction reproduces the frozen reduced forms") {
  // 2D4 exercises a full-rank Gram matrix, GL2F3 a singular one whose
  // repeated row must drop out.
  for (const char* name : {"2D4", "GL2F3"}) {
    const ReferenceGroup& ref = reference_group(name);
    RowReduction r = row_reduce_upper(ref.multiplicities);
    CHECK(r.h_tilde == ref.h_tilde);
    CHECK(r.u_tilde * ref.multiplicities == r.h_tilde);
    for (size_t i = 1; i < r.pivot_cols.size(); ++i)
      CHECK(r.pivot_cols[i] > r.pivot_cols[i - 1]);
    for (int i = 0; i < r.h_tilde.rows(); ++i) CHECK_FALSE(r.h_tilde.is_zero_row(i));
  }
}

TEST_CASE("smith normal form of pinned matrices") {
  SmithDecomposition id2 = smith_normal_form(IntMatrix::identity(2));
  CHECK(id2.invariant_factors == std::vector<BigInt>{1, 1});

  SmithDecomposition d = smith_normal_form(IntMatrix{{2, 4}, {6, 8}});
  CHECK(d.invariant_factors == std::vector<BigInt>{2, 4});
  CHECK(d.left_transform * IntMatrix{{2, 4}, {6, 8}} * d.right_transform ==
        padded_diagonal(d, 2, 2));

  // Image relations 2e1+2e2, e3+e4, 2e5, 2e6 inside Z^6: three cyclic
  // summands of order 2 survive next to a free rank of 2.
  IntMatrix relations{{2, 2, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0},
                      {0, 0, 0, 0, 2, 0}, {0, 0, 0, 0, 0, 2}};
  SmithDecomposition rel = smith_normal_form(relations);
  CHECK(rel.invariant_factors == std::vector<BigInt>{1, 2, 2, 2});
  CHECK(rel.rank() == 4);

  CHECK(smith_normal_form(IntMatrix(3, 3)).invariant_factors.empty());
}

TEST_CASE("smith normal form against the minor-gcd oracle") {
  std::mt19937 rng(926331);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int trial = 0; trial < 25; ++trial) {
    IntMatrix m(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m.at(i, j) = entry(rng);

    SmithDecomposition d = smith_normal_form(m);
    CHECK(d.left_transform * m * d.right_transform == padded_diagonal(d, 4, 4));
    CHECK(abs(brute_det(d.left_transform)) == 1);
    CHECK(abs(brute_det(d.right_transform)) == 1);
    CHECK(d.right_transform * d.right_inverse == IntMatrix::identity(4));

    BigInt previous = 1;
    for (size_t k = 0; k < d.invariant_factors.size(); ++k) {
      CHECK(d.invariant_factors[k] > 0);
      CHECK(d.invariant_factors[k] % previous == 0);
      previous = d.invariant_factors[k];
    }

    // d_k = gcd of k x k minors; the k-th invariant factor is d_k / d_{k-1}.
    BigInt dk_prev = 1;
    for (int k = 1; k <= 4; ++k) {
      BigInt dk = minor_gcd(m, k);
      if (k > d.rank()) {
        CHECK(dk == 0);
      } else {
        CHECK(dk == dk_prev * d.invariant_factors[size_t(k) - 1]);
      }
      dk_prev = dk;
    }
  }
}

TEST_CASE("hermite form and integer row solving") {
  IntMatrix a{{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}};
  IntMatrix h = hermite_normal_form(a);
  // Row lattice membership is preserved.
  for (int i = 0; i < a.rows(); ++i) {
    std::vector<BigInt> row(3), x;
    for (int j = 0; j < 3; ++j) row[size_t(j)] = a.at(i, j);
    CHECK(solve_integer_row(h, row, x));
  }
  CHECK(hermite_normal_form(h) == h);

  std::vector<BigInt> outside{1, 0, 0}, x;
  CHECK_FALSE(solve_integer_row(a, outside, x));

  IntMatrix singular{{1, 2, 3}, {2, 4, 6}};
  IntMatrix kernel = integer_row_kernel(singular);
  REQUIRE(kernel.rows() == 1);  // relation (2, -1) up to sign
  CHECK(kernel.at(0, 0) * 1 + kernel.at(0, 1) * 2 == 0);
  CHECK(gcd(kernel.at(0, 0), kernel.at(0, 1)) == 1);
}

TEST_CASE("lattice quotients") {
  IntMatrix rel(5, 5);
  for (int i = 0; i < 4; ++i) rel.at(i, i) = 1;
  rel.at(4, 4) = 2;
  LatticeQuotient q = lattice_quotient(5, rel);
  CHECK(q.free_rank == 0);
  CHECK(q.invariant_factors == std::vector<BigInt>{2});
  REQUIRE(q.torsion_generators.size() == 1);
  // The generator is nontrivial in the quotient but its double is not.
  std::vector<BigInt> twice, x;
  for (const BigInt& c : q.torsion_generators[0]) twice.push_back(2 * c);
  CHECK_FALSE(solve_integer_row(rel, q.torsion_generators[0], x));
  CHECK(solve_integer_row(rel, twice, x));

  LatticeQuotient free1 = lattice_quotient(3, IntMatrix{{1, 0, 0}, {0, 1, 1}});
  CHECK(free1.free_rank == 1);
  CHECK(free1.invariant_factors.empty());
  CHECK(free1.free_generators.size() == 1);
  CHECK(free1.torsion_generators.empty());

  CHECK(lattice_quotient(4, IntMatrix::identity(4)).is_trivial());
  LatticeQuotient whole = lattice_quotient(3, IntMatrix(0, 3));
  CHECK(whole.free_rank == 3);
  CHECK(whole.invariant_factors.empty());
}
