#pragma once

#include <map>
#include <vector>

#include "burnside/matrix.hpp"
#include "burnside/subgroups.hpp"

namespace burnside {

// Multiplication data of the Burnside ring in the basis of transitive G-sets,
// classes in the increasing order of MarksTable.
struct BurnsideStructure {
  // constants[i][j][l] = coefficient of [G/H_l] in [G/H_i] * [G/H_j]
  std::vector<std::vector<std::vector<BigInt>>> constants;
  // multiplicities.at(i, j) = total orbit count of G/H_i x G/H_j
  IntMatrix multiplicities;
};

// Structure constants from the marks table alone, via the inverse of the
// (lower-triangular) table: n_{ij}^l = sum_k m_{ik} m_{jk} (m^{-1})_{kl}.
// Asserts every constant is a non-negative integer.
BurnsideStructure structure_constants(const MarksTable& marks);

// Independent oracle: decomposes the G-set G/H_i x G/H_j into orbits and
// identifies each orbit stabilizer among the subgroup classes.  Returns the
// multiset of coefficients indexed by class.
std::vector<BigInt> oracle_structure_constants(const FiniteGroup& g,
                                               const std::vector<SubgroupClass>& classes,
                                               int i, int j);

// Orthogonal integer basis of the image lattice of the linearization map.
// Presentation order is decreasing: position 0 is the class of G itself.
struct ImageBasis {
  std::vector<int> decreasing;  // position -> index into marks.classes
  IntMatrix multiplicities;     // Gram matrix of transitive permutation characters
  IntMatrix h_tilde;            // row-reduced form, zero rows dropped
  IntMatrix u_tilde;            // u_tilde * multiplicities = h_tilde
  std::vector<int> pivot_cols;  // pivot position of each basis vector
  std::vector<BigInt> norms;    // d_i = <V_i, V_i>
};

// Row-reduces the Gram matrix in the decreasing presentation order.  Checks
// u * M * u^T is diagonal with positive entries d_i and that d_i divides every
// entry of the corresponding reduced row.
ImageBasis image_basis(const BurnsideStructure& s, const MarksTable& marks);

}  // namespace burnside
