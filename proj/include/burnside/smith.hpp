#pragma once

#include "burnside/matrix.hpp"

namespace burnside {

struct SmithDecomposition {
  // Diagonal of the normal form restricted to its nonzero entries; each
  // factor is positive and divides the next.
  std::vector<BigInt> invariant_factors;
  IntMatrix left_transform;    // unimodular, rows x rows
  IntMatrix right_transform;   // unimodular, cols x cols
  IntMatrix right_inverse;     // exact inverse of right_transform
  int rank() const { return int(invariant_factors.size()); }
};

// left_transform * a * right_transform is diagonal with the invariant factors
// in the leading positions.  Pivot selection: smallest absolute value among
// the remaining nonzero entries, ties broken by (row, col).
SmithDecomposition smith_normal_form(const IntMatrix& a);

// Row-style Hermite normal form of the lattice spanned by the rows of a:
// zero rows dropped, pivots positive, entries above each pivot reduced into
// [0, pivot).  Canonical for the row lattice.
IntMatrix hermite_normal_form(const IntMatrix& a);

// Basis (as rows) of the lattice { x : x * a = 0 }.  The basis is saturated
// and returned in Hermite normal form.
IntMatrix integer_row_kernel(const IntMatrix& a);

// Solves x * a = b exactly over the integers.  Returns false when b is not in
// the row lattice of a (no integer solution).
bool solve_integer_row(const IntMatrix& a, const std::vector<BigInt>& b,
                       std::vector<BigInt>& x);

struct LatticeQuotient {
  int free_rank = 0;
  std::vector<BigInt> invariant_factors;          // the factors > 1 only
  std::vector<std::vector<BigInt>> torsion_generators;  // ambient coordinates
  std::vector<std::vector<BigInt>> free_generators;     // ambient coordinates
  bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
};

// Quotient of the standard lattice Z^ambient_rank by the row lattice of
// `relations`.  Generator coordinates refer to the ambient basis.
LatticeQuotient lattice_quotient(int ambient_rank, const IntMatrix& relations);

}  // namespace burnside
